//! Rational polyhedral cones in a lattice `Z^r`, their duals, and lattice
//! points in graded slices.
//!
//! A cone lives in `Z^r ⊗ Q` and its facet normals in the dual space; the
//! pairing between the two is the ordinary dot product. All vectors are
//! stored as primitive integer vectors.

mod enumerate;

pub use enumerate::{shifted_slice_points, slice_points, zero_pairing_pairs};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{primitive_integer, Rat, RatMatrix};

/// Largest ambient rank accepted by the general (non-simplicial) duality.
pub const MAX_RANK: usize = 8;
/// Cap on intermediate rays kept by the double description iteration.
pub const MAX_RAYS: usize = 20_000;

pub type Point = Vec<i64>;

/// A full-dimensional, pointed rational polyhedral cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    generators: Vec<Point>,
    facets: Vec<Point>,
}

impl Cone {
    /// Cone spanned by `generators`; redundant generators are dropped.
    pub fn from_generators(rank: usize, generators: &[Vec<Rat>]) -> Result<Cone> {
        let gens = primitive_points(rank, generators)?;
        Cone::from_points(rank, gens)
    }

    pub fn from_integer_generators(rank: usize, generators: &[Point]) -> Result<Cone> {
        let rats: Vec<Vec<Rat>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        Cone::from_generators(rank, &rats)
    }

    fn from_points(rank: usize, gens: Vec<Point>) -> Result<Cone> {
        if gens.is_empty() || matrix_rank(&gens) < rank {
            return Err(Error::NotFullDimensional);
        }
        let facets = extreme_rays_of_dual(rank, &gens)?;
        if matrix_rank(&facets) < rank {
            // the dual is not full-dimensional, i.e. the cone contains a line
            return Err(Error::NotFullDimensional);
        }
        let generators = extreme_generators(rank, &gens, &facets);
        let cone = Cone {
            rank,
            generators,
            facets,
        };
        debug_assert!(cone.is_consistent());
        Ok(cone)
    }

    /// Positive orthant of `Z^r`.
    pub fn orthant(rank: usize) -> Cone {
        let mut basis: Vec<Point> = (0..rank).map(|i| unit(rank, i)).collect();
        basis.sort();
        Cone {
            rank,
            generators: basis.clone(),
            facets: basis,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Primitive generators of the extreme rays, sorted.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Primitive inward facet normals, sorted.
    pub fn facets(&self) -> &[Point] {
        &self.facets
    }

    pub fn is_simplicial(&self) -> bool {
        self.generators.len() == self.rank
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, x) >= 0)
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| {
            let s: Rat = f
                .iter()
                .zip(x)
                .map(|(&a, b)| b * Rat::from_integer(a.into()))
                .sum();
            !s.is_negative()
        })
    }

    /// Whether `x` lies in the relative interior (pairs positively with every facet).
    pub fn in_interior(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, x) > 0)
    }

    /// Every generator pairs nonnegatively with every facet normal, and each
    /// facet is supported by `rank - 1` independent generators.
    pub fn is_consistent(&self) -> bool {
        self.generators.iter().all(|g| self.contains(g))
            && self.facets.iter().all(|f| {
                let tight: Vec<Point> = self
                    .generators
                    .iter()
                    .filter(|g| dot(f, g) == 0)
                    .cloned()
                    .collect();
                matrix_rank(&tight) == self.rank - 1
            })
    }

    /// Indices of the generators that pair to zero with facet `i`.
    pub fn facet_generators(&self, i: usize) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&j| dot(&self.facets[i], &self.generators[j]) == 0)
            .collect()
    }
}

/// `{y : x·y >= 0 for all x in C}`.
pub fn dual_cone(c: &Cone) -> Cone {
    Cone {
        rank: c.rank,
        generators: c.facets.clone(),
        facets: c.generators.clone(),
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(rank: usize, i: usize) -> Point {
    (0..rank).map(|j| i64::from(i == j)).collect()
}

pub(crate) fn matrix_rank(rows: &[Point]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    RatMatrix::from_i64(rows).rank()
}

fn primitive_points(rank: usize, vs: &[Vec<Rat>]) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for v in vs {
        if v.len() != rank {
            return Err(Error::InvalidData(format!(
                "vector of length {} in rank {rank}",
                v.len()
            )));
        }
        let p = primitive_integer(v);
        if p.iter().all(Zero::is_zero) {
            continue;
        }
        let p: Option<Point> = p.iter().map(ToPrimitive::to_i64).collect();
        let p = p.ok_or_else(|| Error::ConeCapExceeded("coordinate exceeds 64 bits".into()))?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

pub(crate) fn primitive(v: Vec<i128>) -> Result<Point> {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    v.into_iter()
        .map(|x| if g == 0 { x } else { x / g })
        .map(|x| {
            i64::try_from(x)
                .map_err(|_| Error::ConeCapExceeded("coordinate exceeds 64 bits".into()))
        })
        .collect()
}

/// Extreme rays of `{y : g·y >= 0 for all g}` for spanning `gens`.
fn extreme_rays_of_dual(rank: usize, gens: &[Point]) -> Result<Vec<Point>> {
    // independent constraints to start from
    let mut basis: Vec<usize> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut trial: Vec<Point> = basis.iter().map(|&j| gens[j].clone()).collect();
        trial.push(g.clone());
        if matrix_rank(&trial) > basis.len() {
            basis.push(i);
        }
        if basis.len() == rank {
            break;
        }
    }
    let b: Vec<Point> = basis.iter().map(|&j| gens[j].clone()).collect();
    let inv = RatMatrix::from_i64(&b).inverse().expect("independent rows");
    // columns of the inverse pair to the identity with the chosen constraints
    let mut rays: Vec<Point> = Vec::with_capacity(rank);
    for j in 0..rank {
        let col = inv.column(j);
        let p = primitive_integer(&col);
        rays.push(
            p.iter()
                .map(|x| x.to_i64().expect("small entries"))
                .collect(),
        );
    }
    if gens.len() == rank {
        rays.sort();
        return Ok(rays);
    }
    if rank > MAX_RANK {
        return Err(Error::ConeCapExceeded(format!(
            "ambient rank {rank} > {MAX_RANK}"
        )));
    }
    let mut processed: Vec<Point> = b;
    for (i, a) in gens.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<i64> = rays.iter().map(|r| dot(a, r)).collect();
        let mut next: Vec<Point> = Vec::new();
        for (r, &v) in rays.iter().zip(&vals) {
            if v >= 0 {
                next.push(r.clone());
            }
        }
        for (p, &vp) in rays.iter().zip(&vals) {
            if vp <= 0 {
                continue;
            }
            for (n, &vn) in rays.iter().zip(&vals) {
                if vn >= 0 {
                    continue;
                }
                if !adjacent(rank, &processed, p, n) {
                    continue;
                }
                let combo: Vec<i128> = p
                    .iter()
                    .zip(n)
                    .map(|(&x, &y)| i128::from(vp) * i128::from(y) - i128::from(vn) * i128::from(x))
                    .collect();
                let r = primitive(combo)?;
                if !next.contains(&r) {
                    next.push(r);
                }
            }
        }
        if next.len() > MAX_RAYS {
            return Err(Error::ConeCapExceeded(format!(
                "more than {MAX_RAYS} intermediate rays"
            )));
        }
        rays = next;
        processed.push(a.clone());
    }
    rays.sort();
    Ok(rays)
}

/// Two extreme rays are adjacent when the constraints tight at both have rank `r - 2`.
fn adjacent(rank: usize, constraints: &[Point], p: &[i64], n: &[i64]) -> bool {
    let common: Vec<Point> = constraints
        .iter()
        .filter(|a| dot(a, p) == 0 && dot(a, n) == 0)
        .cloned()
        .collect();
    common.len() >= rank - 2 && matrix_rank(&common) == rank - 2
}

fn extreme_generators(rank: usize, gens: &[Point], facets: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = gens
        .iter()
        .filter(|g| {
            let tight: Vec<Point> = facets.iter().filter(|f| dot(f, g) == 0).cloned().collect();
            matrix_rank(&tight) == rank - 1
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Facets by brute force over all `(r-1)`-subsets of generators. Exponential;
/// kept as an independent check of [`Cone::from_generators`].
pub fn facets_by_subsets(rank: usize, gens: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    let k = rank - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    if gens.len() < k {
        return out;
    }
    loop {
        let rows: Vec<Point> = idx.iter().map(|&i| gens[i].clone()).collect();
        let m = RatMatrix::from_i64(&rows);
        let kernel = if k == 0 { Vec::new() } else { m.kernel() };
        let candidates: Vec<Vec<Rat>> = if k == 0 {
            vec![
                vec![Rat::from_integer(1.into())],
                vec![Rat::from_integer((-1).into())],
            ]
        } else if kernel.len() == 1 {
            let v = kernel[0].clone();
            let neg: Vec<Rat> = v.iter().map(|x| -x).collect();
            vec![v, neg]
        } else {
            Vec::new()
        };
        for c in candidates {
            let p: Point = primitive_integer(&c)
                .iter()
                .map(|x| x.to_i64().unwrap())
                .collect();
            if gens.iter().all(|g| dot(&p, g) >= 0) && !out.contains(&p) {
                out.push(p);
            }
        }
        // next subset
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if idx[i] < gens.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            out.sort();
            return out;
        }
    }
}
