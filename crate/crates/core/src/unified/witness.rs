//! Ideal-membership certificates for the rays of `K_N^v`:
//! `[l v] = Σ_n P_n · Σ_m f(m) (m·n) [m]` with every monomial `[w]` of `P_n`
//! satisfying `w·n >= -1` and `w·n' >= 0` for the other `n'`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, ToPrimitive, Zero};

use crate::cone::{dot, dual_cone, shifted_slice_points, Cone, Point};
use crate::error::{Error, Result};
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{rat_int, Rat, RatMatrix};
use crate::model::{lattice_data, Potential, SymmetryGroup};

use super::ToricMirrorData;

/// The data a witness search needs, in integral lattice coordinates of `M`
/// with `N` as the dual lattice.
#[derive(Clone, Debug)]
pub struct WitnessProblem {
    delta: Vec<Point>,
    delta_dual: Vec<Point>,
    f: Vec<Rat>,
    /// Grading functional on `M`, equal to 1 on `Δ`.
    phi: Vec<Rat>,
    /// `K_N^v`.
    cone: Cone,
    /// A point with `shift·n >= 1` for every `n ∈ Δ^v`; equal to 1 when
    /// available, which makes candidate enumeration exact.
    shift: Point,
    /// Rows: basis of `M` in exponent coordinates, for display of BH data.
    exponent_basis: Option<RatMatrix>,
}

impl WitnessProblem {
    /// The first condition for unified data: rays of `K_N^v`, potential from `(Δ, f)`.
    pub fn primal(data: &ToricMirrorData) -> WitnessProblem {
        WitnessProblem {
            delta: data.delta().to_vec(),
            delta_dual: data.delta_dual().to_vec(),
            f: data.f().to_vec(),
            phi: data.deg_dual_functional(),
            cone: data.cone_n_dual(),
            shift: data.deg().to_vec(),
            exponent_basis: None,
        }
    }

    /// The second condition: rays of `K_M^v`, potential from `(Δ^v, g)`.
    pub fn dual(data: &ToricMirrorData) -> WitnessProblem {
        WitnessProblem::primal(&data.swap())
    }

    /// A Berglund-Hübsch pair with any admissible group, not necessarily of
    /// Calabi-Yau type: `M` is the lattice of `G`-invariant Laurent
    /// monomials and the grading is the weight system of `W`.
    pub fn from_bh(p: &Potential, group: &SymmetryGroup) -> Result<WitnessProblem> {
        let data = lattice_data(p, group);
        let d = p.dim();
        let to_point = |v: Vec<Rat>| -> Result<Point> {
            v.iter()
                .map(|x| {
                    x.is_integer()
                        .then(|| x.to_integer().to_i64())
                        .flatten()
                        .ok_or_else(|| {
                            Error::InvalidData("lattice coordinate is not a small integer".into())
                        })
                })
                .collect()
        };
        let delta = p
            .exponents()
            .iter()
            .map(|row| {
                to_point(data.m_coords(&row.iter().map(|&a| rat_int(a)).collect::<Vec<_>>()))
            })
            .collect::<Result<Vec<_>>>()?;
        let delta_dual = (0..d)
            .map(|j| {
                to_point(
                    data.n_coords(&(0..d).map(|i| rat_int((i == j) as i64)).collect::<Vec<_>>()),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let cone = dual_cone(&Cone::from_integer_generators(d, &delta_dual)?);
        let mut shift = vec![0; d];
        for g in cone.generators() {
            for (s, x) in shift.iter_mut().zip(g) {
                *s += x;
            }
        }
        Ok(WitnessProblem {
            delta,
            delta_dual,
            f: p.coefficients().to_vec(),
            phi: data.deg_dual_coords.clone(),
            cone,
            shift,
            exponent_basis: Some(data.m_basis.clone()),
        })
    }

    /// Number of rays of `K_N^v`.
    pub fn ray_count(&self) -> usize {
        self.cone.generators().len()
    }

    /// Primitive generators of the rays of `K_N^v`.
    pub fn rays(&self) -> &[Point] {
        self.cone.generators()
    }

    pub fn delta(&self) -> &[Point] {
        &self.delta
    }

    pub fn delta_dual(&self) -> &[Point] {
        &self.delta_dual
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Grading of a point of `M`.
    pub fn degree(&self, w: &[i64]) -> Rat {
        self.phi.iter().zip(w).map(|(p, &x)| p * rat_int(x)).sum()
    }

    /// Exponent coordinates of a point of `M` (BH problems only).
    pub fn exponents(&self, w: &[i64]) -> Option<Vec<Rat>> {
        let basis = self.exponent_basis.as_ref()?;
        let c: Vec<Rat> = w.iter().map(|&x| rat_int(x)).collect();
        Some(basis.vec_mul(&c))
    }

    /// `Σ_m f(m) (m·n) [m]` for `n = Δ^v[j]`, zero terms dropped.
    pub fn generator(&self, j: usize) -> Vec<(Point, Rat)> {
        let n = &self.delta_dual[j];
        self.delta
            .iter()
            .zip(&self.f)
            .filter_map(|(m, c)| {
                let mn = dot(m, n);
                (mn != 0).then(|| (m.clone(), c * rat_int(mn)))
            })
            .collect()
    }

    /// Support condition on a monomial of `P_n`, `n = Δ^v[j]`.
    pub fn admissible(&self, j: usize, w: &[i64]) -> bool {
        self.delta_dual
            .iter()
            .enumerate()
            .all(|(i, n)| dot(w, n) >= if i == j { -1 } else { 0 })
    }
}

/// A certified identity `[target] = Σ_n P_n · Σ_m f(m)(m·n)[m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub ray_index: usize,
    /// Primitive generator of the ray.
    pub ray: Point,
    /// `target = multiple · ray`.
    pub multiple: i64,
    pub target: Point,
    pub degree: Rat,
    /// `(index into Δ^v, P_n as (monomial, coefficient))`, zero polynomials omitted.
    pub polys: Vec<(usize, Vec<(Point, Rat)>)>,
}

impl MembershipWitness {
    /// Expands the right-hand side.
    pub fn expand(&self, problem: &WitnessProblem) -> BTreeMap<Point, Rat> {
        let mut out: BTreeMap<Point, Rat> = BTreeMap::new();
        for (j, poly) in &self.polys {
            let gen = problem.generator(*j);
            for (w, c) in poly {
                for (m, e) in &gen {
                    let p: Point = w.iter().zip(m).map(|(a, b)| a + b).collect();
                    *out.entry(p).or_insert_with(Rat::zero) += c * e;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Support conditions and the identity itself, checked by expansion
    /// without reference to how the coefficients were found.
    pub fn verify(&self, problem: &WitnessProblem) -> bool {
        let ray = problem.rays().get(self.ray_index);
        let target: Point = self.ray.iter().map(|x| x * self.multiple).collect();
        ray == Some(&self.ray)
            && target == self.target
            && self.polys.iter().all(|(j, poly)| {
                *j < problem.delta_dual.len()
                    && poly
                        .iter()
                        .all(|(w, c)| !c.is_zero() && problem.admissible(*j, w))
            })
            && self.expand(problem) == BTreeMap::from([(self.target.clone(), Rat::one())])
    }

    /// Number of monomials over all `P_n`.
    pub fn size(&self) -> usize {
        self.polys.iter().map(|(_, p)| p.len()).sum()
    }
}

/// Solves for a witness with target `l · ray`; `None` when the target is not
/// in the span of the admissible products.
pub fn witness_for_multiple(
    problem: &WitnessProblem,
    ray_index: usize,
    l: i64,
) -> Result<Option<MembershipWitness>> {
    let ray = problem
        .rays()
        .get(ray_index)
        .ok_or_else(|| Error::InvalidData(format!("ray index {ray_index} out of range")))?
        .clone();
    let target: Point = ray.iter().map(|x| x * l).collect();
    let degree = problem.degree(&target);
    let w_degree = &degree - Rat::one();
    let candidates = shifted_slice_points(&problem.cone, &problem.shift, &problem.phi, &w_degree)?;
    let gens: Vec<Vec<(Point, Rat)>> = (0..problem.delta_dual.len())
        .map(|j| problem.generator(j))
        .collect();
    let unknowns: Vec<(usize, &Point)> = (0..problem.delta_dual.len())
        .flat_map(|j| {
            candidates
                .iter()
                .filter(move |w| problem.admissible(j, w))
                .map(move |w| (j, w))
        })
        .filter(|(j, _)| !gens[*j].is_empty())
        .collect();
    let mut rows: HashMap<Point, usize> = HashMap::new();
    rows.insert(target.clone(), 0);
    let mut entries: Vec<(usize, usize, Rat)> = Vec::new();
    for (col, (j, w)) in unknowns.iter().enumerate() {
        for (m, e) in &gens[*j] {
            let p: Point = w.iter().zip(m).map(|(a, b)| a + b).collect();
            let next = rows.len();
            let row = *rows.entry(p).or_insert(next);
            entries.push((row, col, e.clone()));
        }
    }
    let mut mat = SparseMatrix::new(rows.len(), unknowns.len());
    for (r, c, v) in entries {
        mat.add(r, c, v);
    }
    let mut rhs = vec![Rat::zero(); rows.len()];
    rhs[0] = Rat::one();
    let Some(x) = mat.solve(&rhs) else {
        return Ok(None);
    };
    let mut polys: BTreeMap<usize, Vec<(Point, Rat)>> = BTreeMap::new();
    for ((j, w), c) in unknowns.iter().zip(x) {
        if !c.is_zero() {
            polys.entry(*j).or_default().push(((*w).clone(), c));
        }
    }
    let witness = MembershipWitness {
        ray_index,
        ray,
        multiple: l,
        target,
        degree,
        polys: polys.into_iter().collect(),
    };
    if !witness.verify(problem) {
        return Err(Error::CertificateRejected(format!(
            "ray {ray_index}, multiple {l}"
        )));
    }
    Ok(Some(witness))
}

/// The witness with the smallest multiple `l` whose target has degree at
/// most `degree_bound`, or `None` if the search is exhausted.
pub fn key_lemma_witness(
    problem: &WitnessProblem,
    ray_index: usize,
    degree_bound: &Rat,
) -> Result<Option<MembershipWitness>> {
    let ray = problem
        .rays()
        .get(ray_index)
        .ok_or_else(|| Error::InvalidData(format!("ray index {ray_index} out of range")))?;
    let step = problem.degree(ray);
    let mut l = 1;
    while &(&step * rat_int(l)) <= degree_bound {
        if let Some(w) = witness_for_multiple(problem, ray_index, l)? {
            return Ok(Some(w));
        }
        l += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::model::grading_subgroup;

    #[test]
    fn cubic_rays_use_a_constant() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let problem = WitnessProblem::from_bh(&p, &g).unwrap();
        assert_eq!(problem.ray_count(), 3);
        for r in 0..3 {
            let w = key_lemma_witness(&problem, r, &rat_int(3))
                .unwrap()
                .unwrap();
            assert_eq!(w.multiple, 1);
            // x_i^3 = (1/3) x_i ∂_i W
            let e = problem.exponents(&w.target).unwrap();
            assert_eq!(e.iter().filter(|x| **x == rat_int(3)).count(), 1);
            assert_eq!(e.iter().filter(|x| x.is_zero()).count(), 2);
            assert_eq!(w.size(), 1);
            assert_eq!(w.polys[0].1[0].1, rat(1, 3));
            assert!(w.verify(&problem));
        }
    }

    #[test]
    fn single_quadratic_variable() {
        let p = Potential::fermat(&[2]).unwrap();
        let problem = WitnessProblem::from_bh(&p, &SymmetryGroup::trivial(1)).unwrap();
        // x^2 = (1/2) x ∂W with P = 1/2
        let w = witness_for_multiple(&problem, 0, 2).unwrap().unwrap();
        assert_eq!(w.polys, vec![(0, vec![(vec![0], rat(1, 2))])]);
        // the first multiple already works: x = (1/2) x^{-1} · x ∂W
        let first = key_lemma_witness(&problem, 0, &rat_int(1))
            .unwrap()
            .unwrap();
        assert_eq!(first.multiple, 1);
        assert_eq!(first.polys, vec![(0, vec![(vec![-1], rat(1, 2))])]);
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let problem = WitnessProblem::from_bh(&p, &g).unwrap();
        let mut w = key_lemma_witness(&problem, 0, &rat_int(3))
            .unwrap()
            .unwrap();
        w.polys[0].1[0].1 = rat(1, 2);
        assert!(!w.verify(&problem));
    }

    #[test]
    fn zero_bound_finds_nothing() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let problem = WitnessProblem::from_bh(&p, &g).unwrap();
        assert_eq!(key_lemma_witness(&problem, 0, &rat_int(0)).unwrap(), None);
    }

    #[test]
    fn lattice_and_bh_problems_agree_on_cy_data() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let data = ToricMirrorData::from_bh(&p, &g, None).unwrap();
        let a = WitnessProblem::primal(&data);
        let b = WitnessProblem::from_bh(&p, &g).unwrap();
        assert_eq!(a.rays(), b.rays());
        for r in 0..a.ray_count() {
            let wa = key_lemma_witness(&a, r, &rat_int(3)).unwrap().unwrap();
            let wb = key_lemma_witness(&b, r, &rat_int(3)).unwrap().unwrap();
            assert_eq!(wa.target, wb.target);
        }
    }
}
