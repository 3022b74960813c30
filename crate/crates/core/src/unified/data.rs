use num_traits::{ToPrimitive, Zero};

use crate::cone::{dot, dual_cone, Cone, Point};
use crate::error::{Error, Result};
use crate::linalg::{rat_int, Rat};
use crate::model::{lattice_data, Potential, SymmetryGroup};

/// Dual lattices `M = N^v = Z^r` with `Δ ⊂ M`, `Δ^v ⊂ N`, degree elements
/// and coefficient functions. All coordinates are integral and the pairing
/// is the dot product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricMirrorData {
    rank: usize,
    delta: Vec<Point>,
    delta_dual: Vec<Point>,
    deg: Point,
    deg_dual: Point,
    f: Vec<Rat>,
    g: Vec<Rat>,
    cone_m: Cone,
    cone_n: Cone,
}

impl ToricMirrorData {
    /// Validates `deg·n = m·deg^v = 1`, `m·n >= 0` and full-dimensional cones.
    pub fn new(
        rank: usize,
        delta: Vec<Point>,
        delta_dual: Vec<Point>,
        deg: Point,
        deg_dual: Point,
        f: Option<Vec<Rat>>,
        g: Option<Vec<Rat>>,
    ) -> Result<Self> {
        let bad_len =
            |what: &str| Error::InvalidData(format!("{what} has the wrong length for rank {rank}"));
        if delta.iter().any(|m| m.len() != rank) {
            return Err(bad_len("an element of Delta"));
        }
        if delta_dual.iter().any(|n| n.len() != rank) {
            return Err(bad_len("an element of Delta_dual"));
        }
        if deg.len() != rank {
            return Err(bad_len("deg"));
        }
        if deg_dual.len() != rank {
            return Err(bad_len("deg_dual"));
        }
        for (i, m) in delta.iter().enumerate() {
            if dot(m, &deg_dual) != 1 {
                return Err(Error::InvalidData(format!(
                    "Delta[{i}] pairs to {} with deg_dual",
                    dot(m, &deg_dual)
                )));
            }
        }
        for (j, n) in delta_dual.iter().enumerate() {
            if dot(&deg, n) != 1 {
                return Err(Error::InvalidData(format!(
                    "Delta_dual[{j}] pairs to {} with deg",
                    dot(&deg, n)
                )));
            }
        }
        for (i, m) in delta.iter().enumerate() {
            for (j, n) in delta_dual.iter().enumerate() {
                if dot(m, n) < 0 {
                    return Err(Error::InvalidData(format!(
                        "Delta[{i}] pairs negatively with Delta_dual[{j}]"
                    )));
                }
            }
        }
        let f = coefficients(f, delta.len(), "f")?;
        let g = coefficients(g, delta_dual.len(), "g")?;
        let cone_m = Cone::from_integer_generators(rank, &delta)?;
        let cone_n = Cone::from_integer_generators(rank, &delta_dual)?;
        Ok(ToricMirrorData {
            rank,
            delta,
            delta_dual,
            deg,
            deg_dual,
            f,
            g,
            cone_m,
            cone_n,
        })
    }

    /// Lattice form of a Calabi-Yau type Berglund-Hübsch pair `(W, G)`:
    /// `Δ = {u_i}` carries the coefficients of `W`, `Δ^v = {v_j}` carries `g`.
    pub fn from_bh(p: &Potential, group: &SymmetryGroup, g: Option<Vec<Rat>>) -> Result<Self> {
        let data = lattice_data(p, group);
        if !(data.deg_in_m && data.deg_dual_in_n) {
            return Err(Error::NotCalabiYau {
                deg_in_m: data.deg_in_m,
                deg_dual_in_n: data.deg_dual_in_n,
            });
        }
        let d = p.dim();
        let to_point = |v: Vec<Rat>| -> Point {
            v.iter()
                .map(|x| x.to_integer().to_i64().expect("small lattice coordinate"))
                .collect()
        };
        let delta: Vec<Point> = p
            .exponents()
            .iter()
            .map(|row| {
                to_point(data.m_coords(&row.iter().map(|&a| rat_int(a)).collect::<Vec<_>>()))
            })
            .collect();
        let delta_dual: Vec<Point> = (0..d)
            .map(|j| {
                let e: Vec<Rat> = (0..d)
                    .map(|i| if i == j { rat_int(1) } else { Rat::zero() })
                    .collect();
                to_point(data.n_coords(&e))
            })
            .collect();
        let deg = to_point(data.deg_coords.clone());
        let deg_dual = to_point(data.deg_dual_coords.clone());
        ToricMirrorData::new(
            d,
            delta,
            delta_dual,
            deg,
            deg_dual,
            Some(p.coefficients().to_vec()),
            g,
        )
    }

    /// Exchange of the roles of `M` and `N`.
    pub fn swap(&self) -> ToricMirrorData {
        ToricMirrorData {
            rank: self.rank,
            delta: self.delta_dual.clone(),
            delta_dual: self.delta.clone(),
            deg: self.deg_dual.clone(),
            deg_dual: self.deg.clone(),
            f: self.g.clone(),
            g: self.f.clone(),
            cone_m: self.cone_n.clone(),
            cone_n: self.cone_m.clone(),
        }
    }

    /// Same data with new coefficient functions.
    pub fn with_coefficients(&self, f: Vec<Rat>, g: Vec<Rat>) -> Result<Self> {
        let f = coefficients(Some(f), self.delta.len(), "f")?;
        let g = coefficients(Some(g), self.delta_dual.len(), "g")?;
        Ok(ToricMirrorData {
            f,
            g,
            ..self.clone()
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn delta(&self) -> &[Point] {
        &self.delta
    }

    pub fn delta_dual(&self) -> &[Point] {
        &self.delta_dual
    }

    pub fn deg(&self) -> &[i64] {
        &self.deg
    }

    pub fn deg_dual(&self) -> &[i64] {
        &self.deg_dual
    }

    pub fn f(&self) -> &[Rat] {
        &self.f
    }

    pub fn g(&self) -> &[Rat] {
        &self.g
    }

    /// `k = deg·deg^v`.
    pub fn index(&self) -> i64 {
        dot(&self.deg, &self.deg_dual)
    }

    /// `ĉ = rank - 2 deg·deg^v`.
    pub fn central_charge(&self) -> i64 {
        self.rank as i64 - 2 * self.index()
    }

    /// `K_M`, spanned by `Δ`.
    pub fn cone_m(&self) -> &Cone {
        &self.cone_m
    }

    /// `K_N`, spanned by `Δ^v`.
    pub fn cone_n(&self) -> &Cone {
        &self.cone_n
    }

    /// `K_N^v ⊂ M`.
    pub fn cone_n_dual(&self) -> Cone {
        dual_cone(&self.cone_n)
    }

    /// `K_M^v ⊂ N`.
    pub fn cone_m_dual(&self) -> Cone {
        dual_cone(&self.cone_m)
    }

    /// `deg` as a rational functional on `N`.
    pub fn deg_functional(&self) -> Vec<Rat> {
        self.deg.iter().map(|&x| rat_int(x)).collect()
    }

    /// `deg^v` as a rational functional on `M`.
    pub fn deg_dual_functional(&self) -> Vec<Rat> {
        self.deg_dual.iter().map(|&x| rat_int(x)).collect()
    }
}

fn coefficients(c: Option<Vec<Rat>>, n: usize, what: &str) -> Result<Vec<Rat>> {
    match c {
        None => Ok(vec![rat_int(1); n]),
        Some(c) => {
            if c.len() != n {
                return Err(Error::InvalidData(format!(
                    "{what} has {} values for {n} points",
                    c.len()
                )));
            }
            if let Some(i) = c.iter().position(Zero::is_zero) {
                return Err(Error::InvalidData(format!("{what}[{i}] is zero")));
            }
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::grading_subgroup;

    #[test]
    fn cubic_with_grading_group() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let data = ToricMirrorData::from_bh(&p, &g, None).unwrap();
        assert_eq!(data.index(), 1);
        assert_eq!(data.central_charge(), 1);
        assert_eq!(data.delta().len(), 3);
        assert!(data.cone_n().is_simplicial());
        assert_eq!(data.swap().swap(), data);
    }

    #[test]
    fn non_cy_is_rejected() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let err = ToricMirrorData::from_bh(&p, &SymmetryGroup::trivial(3), None).unwrap_err();
        assert_eq!(
            err,
            Error::NotCalabiYau {
                deg_in_m: true,
                deg_dual_in_n: false
            }
        );
    }

    #[test]
    fn negative_pairing_is_rejected() {
        let r = ToricMirrorData::new(
            2,
            vec![vec![1, 0], vec![1, -1]],
            vec![vec![1, 0], vec![1, 2]],
            vec![1, 0],
            vec![1, 0],
            None,
            None,
        );
        assert!(matches!(r, Err(Error::InvalidData(_))));
    }
}
