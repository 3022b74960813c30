//! Lattice form of a potential with a symmetry group.
//!
//! Coordinates: a point of `N ⊗ Q` is written in the basis `v_1, ..., v_d`
//! of `N_0`, a point of `M ⊗ Q` by its pairings with the `v_j` (so `u_i` is
//! row `i` of `A_W` and `M_0^v = N_0^v = Z^d` in these coordinates). The
//! pairing is then the ordinary dot product.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{
    denominator_lcm, frac, hermite_normal_form, rat_int, IntMatrix, Rat, RatMatrix,
};

use super::group::{exponential_grading_element, subgroup_closure, GroupElement, SymmetryGroup};
use super::Potential;

/// Basis (rows) of `Z^d + sum Z h_g`.
pub fn overlattice_basis(d: usize, generators: &[GroupElement]) -> RatMatrix {
    let mut rows: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Rat::one() } else { rat_int(0) })
                .collect()
        })
        .collect();
    rows.extend(generators.iter().map(|g| g.h().to_vec()));
    let l = denominator_lcm(rows.iter().flatten());
    let lr = Rat::from_integer(l.clone());
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| (x * &lr).to_integer()).collect())
        .collect();
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(&scaled));
    let basis: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| Rat::new(h[(i, j)].clone(), l.clone()))
                .collect()
        })
        .collect();
    RatMatrix::from_rows(&basis)
}

/// Dual pair of overlattices `N_0 ⊆ N ⊆ M_0^v`, `M_0 ⊆ M = N^v ⊆ N_0^v`.
#[derive(Clone, Debug)]
pub struct LatticeData {
    pub rank: usize,
    /// Rows: basis of `N` in `v`-coordinates.
    pub n_basis: RatMatrix,
    /// Rows: basis of `M` in exponent coordinates; dual to `n_basis`.
    pub m_basis: RatMatrix,
    /// `m_basis * n_basis^T`.
    pub pairing: RatMatrix,
    /// `deg` (pairs to 1 with every `v_j`) in exponent coordinates.
    pub deg: Vec<Rat>,
    /// `deg^v = sum_j q_j v_j` in `v`-coordinates.
    pub deg_dual: Vec<Rat>,
    /// `deg` in the basis of `M`.
    pub deg_coords: Vec<Rat>,
    /// `deg^v` in the basis of `N`.
    pub deg_dual_coords: Vec<Rat>,
    pub deg_in_m: bool,
    pub deg_dual_in_n: bool,
    /// `[N : N_0]`, equal to `|G|`.
    pub index_n: i64,
    /// `[M : M_0]`, equal to `|G^v|`.
    pub index_m: i64,
}

impl LatticeData {
    /// Coordinates of an exponent-coordinate vector in the basis of `M`.
    pub fn m_coords(&self, m: &[Rat]) -> Vec<Rat> {
        // m = c * m_basis  <=>  c_i = m . n_i
        (0..self.rank)
            .map(|i| crate::linalg::dot(m, self.n_basis.row(i)))
            .collect()
    }

    /// Coordinates of a `v`-coordinate vector in the basis of `N`.
    pub fn n_coords(&self, n: &[Rat]) -> Vec<Rat> {
        (0..self.rank)
            .map(|i| crate::linalg::dot(n, self.m_basis.row(i)))
            .collect()
    }

    pub fn contains_m(&self, m: &[Rat]) -> bool {
        self.m_coords(m).iter().all(|x| x.is_integer())
    }

    pub fn contains_n(&self, n: &[Rat]) -> bool {
        self.n_coords(n).iter().all(|x| x.is_integer())
    }
}

pub fn lattice_data(p: &Potential, g: &SymmetryGroup) -> LatticeData {
    let d = p.dim();
    let n_basis = overlattice_basis(d, g.generators());
    let m_basis = n_basis
        .inverse()
        .expect("overlattice basis is invertible")
        .transpose();
    let pairing = m_basis.mul(&n_basis.transpose());
    let deg = vec![Rat::one(); d];
    let deg_dual = p.q().to_vec();
    let mut data = LatticeData {
        rank: d,
        n_basis,
        m_basis,
        pairing,
        deg: deg.clone(),
        deg_dual: deg_dual.clone(),
        deg_coords: Vec::new(),
        deg_dual_coords: Vec::new(),
        deg_in_m: false,
        deg_dual_in_n: false,
        index_n: 0,
        index_m: 0,
    };
    data.deg_coords = data.m_coords(&deg);
    data.deg_dual_coords = data.n_coords(&deg_dual);
    data.deg_in_m = data.deg_coords.iter().all(|x| x.is_integer());
    data.deg_dual_in_n = data.deg_dual_coords.iter().all(|x| x.is_integer());
    let index_n = data.n_basis.det().abs().recip();
    data.index_n = index_n.to_integer().to_i64().expect("index fits in i64");
    data.index_m = p.det().abs() / data.index_n;
    data
}

/// The Krawitz dual group, read off from `M = N^v` as a subgroup of `Aut(W^T)`.
pub fn dual_group(p: &Potential, g: &SymmetryGroup) -> Result<SymmetryGroup> {
    let data = lattice_data(p, g);
    let t = p.transpose()?;
    let a_inv_t = p
        .exponent_matrix()
        .to_rat()
        .inverse()
        .ok_or(Error::SingularMatrix)?
        .transpose();
    // m = sum_i c_i u_i has v'-coordinates c = A^{-T} m for the transposed potential
    let gens: Vec<GroupElement> = (0..data.rank)
        .map(|i| GroupElement::new(a_inv_t.mul_vec(data.m_basis.row(i))))
        .filter(|e| !e.is_identity())
        .collect();
    subgroup_closure(&t, &gens)
}

/// Calabi-Yau bookkeeping for `(W, G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyReport {
    pub weight_sum: Rat,
    pub k: Option<i64>,
    pub deg_in_m: bool,
    pub deg_dual_in_n: bool,
    pub central_charge: Rat,
}

impl CyReport {
    pub fn is_calabi_yau_type(&self) -> bool {
        self.k.is_some() && self.deg_in_m && self.deg_dual_in_n
    }

    pub fn require(&self) -> Result<()> {
        if self.is_calabi_yau_type() {
            Ok(())
        } else {
            Err(Error::NotCalabiYau {
                deg_in_m: self.deg_in_m,
                deg_dual_in_n: self.deg_dual_in_n,
            })
        }
    }
}

pub fn cy_check(p: &Potential, g: &SymmetryGroup) -> CyReport {
    let data = lattice_data(p, g);
    CyReport {
        weight_sum: p.weights().sum.clone(),
        k: p.weights().k(),
        deg_in_m: data.deg_in_m,
        deg_dual_in_n: data.deg_dual_in_n,
        central_charge: p.central_charge(),
    }
}

/// Group generated by the exponential grading element.
pub fn grading_subgroup(p: &Potential) -> Result<SymmetryGroup> {
    subgroup_closure(p, &[exponential_grading_element(p)])
}

/// Canonical representative of a `v`-coordinate vector modulo `N_0`.
pub fn reduce_mod_n0(n: &[Rat]) -> Vec<Rat> {
    n.iter().map(frac).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::model::group::aut_group;

    fn cubic() -> Potential {
        Potential::fermat(&[3, 3, 3]).unwrap()
    }

    #[test]
    fn cubic_with_grading_group() {
        let p = cubic();
        let g = grading_subgroup(&p).unwrap();
        let data = lattice_data(&p, &g);
        assert_eq!(data.index_n, 3);
        assert_eq!(data.index_m, 9);
        assert!(data.deg_in_m);
        assert!(data.deg_dual_in_n);
        assert_eq!(data.pairing, RatMatrix::identity(3));
    }

    #[test]
    fn trivial_group_gives_standard_lattices() {
        let p = cubic();
        let data = lattice_data(&p, &SymmetryGroup::trivial(3));
        assert_eq!(data.n_basis, RatMatrix::identity(3));
        assert_eq!(data.m_basis, RatMatrix::identity(3));
        assert!(data.deg_in_m);
        assert!(!data.deg_dual_in_n);
    }

    #[test]
    fn full_group_gives_m0() {
        let p = cubic();
        let aut = aut_group(&p).unwrap();
        let data = lattice_data(&p, &aut);
        assert_eq!(data.index_n, 27);
        assert_eq!(data.index_m, 1);
        assert!(data.deg_dual_in_n);
        // deg = (1,1,1) = (u_1 + u_2 + u_3)/3 is not in M_0
        assert!(!data.deg_in_m);
    }

    #[test]
    fn dual_group_examples() {
        let p = cubic();
        let trivial = SymmetryGroup::trivial(3);
        assert_eq!(dual_group(&p, &trivial).unwrap().order(), 27);
        let aut = aut_group(&p).unwrap();
        assert_eq!(dual_group(&p, &aut).unwrap().order(), 1);
        let j = grading_subgroup(&p).unwrap();
        let dual = dual_group(&p, &j).unwrap();
        assert_eq!(dual.order(), 9);
        assert!(dual.in_sl());
    }

    #[test]
    fn cy_reports() {
        let p = cubic();
        let r = cy_check(&p, &grading_subgroup(&p).unwrap());
        assert!(r.is_calabi_yau_type());
        assert_eq!(r.central_charge, rat_int(1));
        let quintic = Potential::fermat(&[5; 5]).unwrap();
        let r = cy_check(&quintic, &grading_subgroup(&quintic).unwrap());
        assert_eq!(r.k, Some(1));
        assert_eq!(r.central_charge, rat_int(3));
        let chain = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        let r = cy_check(&chain, &aut_group(&chain).unwrap());
        assert_eq!(r.k, None);
        assert_eq!(r.weight_sum, rat(3, 4));
        assert!(!r.is_calabi_yau_type());
    }
}
