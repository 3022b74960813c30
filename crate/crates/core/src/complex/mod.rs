//! Finite bigraded complexes `C[(K ⊕ K')_0] ⊗ Λ*` and their cohomology.
//!
//! A basis element is `[m ⊕ n] ⊗ b_S` with `m` in the first cone, `n` in
//! the second, `m·n = 0`, and `b_S` a wedge monomial in the standard basis of
//! the exterior lattice. Multiplying by `[m']` or `[n']` gives zero when the
//! new pairing is positive.

pub mod exterior;
mod quotient;

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::cone::{dot, slice_points, Cone, Point};
use crate::error::{Error, Result};
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{rat_int, Rat};
use crate::table::HodgeTable;
use crate::unified::ToricMirrorData;

use exterior::{contraction_terms, degree, subsets_of_size, wedge_terms, Wedge};
use quotient::Quotient;

/// Which pair of cones carries the monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConePair {
    /// `(K_N^v, K_N)`.
    NDual,
    /// `(K_M, K_M^v)`.
    MPrimal,
}

/// Which lattice the exterior algebra is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exterior {
    M,
    N,
}

/// One of the four subcomplexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexVariant {
    pub cones: ConePair,
    pub exterior: Exterior,
}

impl ComplexVariant {
    /// The B ring complex `(K_N^v, K_N)` with `Λ*(N)`.
    pub const B: ComplexVariant = ComplexVariant {
        cones: ConePair::NDual,
        exterior: Exterior::N,
    };
    /// The A ring complex `(K_N^v, K_N)` with `Λ*(M)`.
    pub const A: ComplexVariant = ComplexVariant {
        cones: ConePair::NDual,
        exterior: Exterior::M,
    };

    pub fn all() -> [ComplexVariant; 4] {
        [
            ComplexVariant::B,
            ComplexVariant::A,
            ComplexVariant {
                cones: ConePair::MPrimal,
                exterior: Exterior::N,
            },
            ComplexVariant {
                cones: ConePair::MPrimal,
                exterior: Exterior::M,
            },
        ]
    }
}

/// Differential shape: `B` contracts by `Δ` and wedges by `Δ^v`; `A` wedges
/// by `Δ` and contracts by `Δ^v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub m: Point,
    pub n: Point,
    pub wedge: Wedge,
}

/// Ordered basis of one bidegree.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    pub variant: ComplexVariant,
    pub coh: i64,
    pub conf: i64,
    pub basis: Vec<BasisElement>,
}

impl ComplexSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A variant resolved to the `(K_N^v, K_N)` cones of possibly swapped data.
struct Prepared {
    data: ToricMirrorData,
    kind: Kind,
    first: Cone,
    second: Cone,
    deg_dual: Vec<Rat>,
    deg: Vec<Rat>,
    k: i64,
}

impl Prepared {
    fn new(data: &ToricMirrorData, variant: ComplexVariant) -> Prepared {
        // (K_M, K_M^v) with Λ*(N) on the data is (K_N'^v, K_N') with Λ*(M') on
        // the swapped data, and likewise for the other exterior side.
        let (data, kind) = match (variant.cones, variant.exterior) {
            (ConePair::NDual, Exterior::N) => (data.clone(), Kind::B),
            (ConePair::NDual, Exterior::M) => (data.clone(), Kind::A),
            (ConePair::MPrimal, Exterior::N) => (data.swap(), Kind::A),
            (ConePair::MPrimal, Exterior::M) => (data.swap(), Kind::B),
        };
        let first = data.cone_n_dual();
        let second = data.cone_n().clone();
        let deg_dual = data.deg_dual_functional();
        let deg = data.deg_functional();
        let k = data.index();
        Prepared {
            data,
            kind,
            first,
            second,
            deg_dual,
            deg,
            k,
        }
    }

    /// `(m·deg^v, deg·n)` for a bidegree and exterior degree, when integral.
    fn split(&self, coh: i64, conf: i64, s: i64) -> Option<(i64, i64)> {
        let big = coh + conf + 2 * self.k - s;
        let small = coh - conf + s;
        if big % 2 != 0 || small % 2 != 0 {
            return None;
        }
        let (a, b) = match self.kind {
            Kind::B => (big / 2, small / 2),
            Kind::A => (small / 2, big / 2),
        };
        (a >= 0 && b >= 0).then_some((a, b))
    }

    fn bidegree(&self, e: &BasisElement) -> (i64, i64) {
        let a = dot(&e.m, self.data.deg_dual());
        let b = dot(self.data.deg(), &e.n);
        let s = degree(e.wedge) as i64;
        let coh = a + b - self.k;
        let conf = match self.kind {
            Kind::B => a - b + s - self.k,
            Kind::A => -a + b + s - self.k,
        };
        (coh, conf)
    }

    /// Largest `m·deg^v` and `deg·n` occurring over the given bidegrees.
    fn needs(&self, cohs: RangeInclusive<i64>, confs: RangeInclusive<i64>) -> (i64, i64) {
        let (mut a_max, mut b_max) = (0, 0);
        for coh in cohs {
            for conf in confs.clone() {
                for s in 0..=self.data.rank() as i64 {
                    if let Some((a, b)) = self.split(coh, conf, s) {
                        a_max = a_max.max(a);
                        b_max = b_max.max(b);
                    }
                }
            }
        }
        (a_max, b_max)
    }

    fn images(&self, e: &BasisElement) -> Vec<(BasisElement, Rat)> {
        let mut out = Vec::new();
        let data = &self.data;
        for (m, f) in data.delta().iter().zip(data.f()) {
            let new_m: Point = e.m.iter().zip(m).map(|(a, b)| a + b).collect();
            if dot(&new_m, &e.n) != 0 {
                continue;
            }
            let terms = match self.kind {
                Kind::B => contraction_terms(e.wedge, m),
                Kind::A => wedge_terms(e.wedge, m),
            };
            for (w, c) in terms {
                out.push((
                    BasisElement {
                        m: new_m.clone(),
                        n: e.n.clone(),
                        wedge: w,
                    },
                    f * rat_int(c),
                ));
            }
        }
        for (n, g) in data.delta_dual().iter().zip(data.g()) {
            let new_n: Point = e.n.iter().zip(n).map(|(a, b)| a + b).collect();
            if dot(&e.m, &new_n) != 0 {
                continue;
            }
            let terms = match self.kind {
                Kind::B => wedge_terms(e.wedge, n),
                Kind::A => contraction_terms(e.wedge, n),
            };
            for (w, c) in terms {
                out.push((
                    BasisElement {
                        m: e.m.clone(),
                        n: new_n.clone(),
                        wedge: w,
                    },
                    g * rat_int(c),
                ));
            }
        }
        out
    }
}

/// Lattice points of both cones by degree, computed once.
struct PointCache {
    first: Vec<Vec<Point>>,
    second: Vec<Vec<Point>>,
}

impl PointCache {
    fn new(p: &Prepared, a_max: i64, b_max: i64) -> Result<PointCache> {
        let first = (0..=a_max.max(0))
            .map(|a| slice_points(&p.first, &p.deg_dual, &rat_int(a)))
            .collect::<Result<_>>()?;
        let second = (0..=b_max.max(0))
            .map(|b| slice_points(&p.second, &p.deg, &rat_int(b)))
            .collect::<Result<_>>()?;
        Ok(PointCache { first, second })
    }
}

fn build_basis(p: &Prepared, cache: &PointCache, coh: i64, conf: i64) -> Vec<BasisElement> {
    let r = p.data.rank();
    let mut basis = Vec::new();
    for s in 0..=r {
        let Some((a, b)) = p.split(coh, conf, s as i64) else {
            continue;
        };
        let (Some(ms), Some(ns)) = (cache.first.get(a as usize), cache.second.get(b as usize))
        else {
            continue;
        };
        let wedges = subsets_of_size(r, s);
        for m in ms {
            for n in ns {
                if dot(m, n) != 0 {
                    continue;
                }
                for &w in &wedges {
                    basis.push(BasisElement {
                        m: m.clone(),
                        n: n.clone(),
                        wedge: w,
                    });
                }
            }
        }
    }
    basis.sort();
    basis
}

fn check_cy(data: &ToricMirrorData) -> Result<()> {
    if data.rank() > 31 {
        return Err(Error::InvalidData(
            "rank too large for the exterior algebra".into(),
        ));
    }
    Ok(())
}

/// Basis of the bidegree `(coh, conf)` of a variant.
pub fn build_slice(
    data: &ToricMirrorData,
    variant: ComplexVariant,
    coh: i64,
    conf: i64,
) -> Result<ComplexSlice> {
    check_cy(data)?;
    let p = Prepared::new(data, variant);
    let (a, b) = p.needs(coh..=coh, conf..=conf);
    let cache = PointCache::new(&p, a, b)?;
    Ok(ComplexSlice {
        variant,
        coh,
        conf,
        basis: build_basis(&p, &cache, coh, conf),
    })
}

/// Matrix of the differential with coefficient functions taken from `data`;
/// row `i` is the image of `from.basis[i]` in the basis of `to`.
pub fn differential_matrix(
    data: &ToricMirrorData,
    from: &ComplexSlice,
    to: &ComplexSlice,
) -> Result<SparseMatrix> {
    if from.variant != to.variant || to.coh != from.coh + 1 || to.conf != from.conf {
        return Err(Error::DegreeMismatch(format!(
            "({}, {}) -> ({}, {})",
            from.coh, from.conf, to.coh, to.conf
        )));
    }
    let p = Prepared::new(data, from.variant);
    Ok(differential(&p, &from.basis, &to.basis))
}

fn differential(p: &Prepared, from: &[BasisElement], to: &[BasisElement]) -> SparseMatrix {
    let index: HashMap<&BasisElement, usize> = to.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut d = SparseMatrix::new(from.len(), to.len());
    for (i, e) in from.iter().enumerate() {
        for (target, c) in p.images(e) {
            let j = *index.get(&target).expect("image lies in the next slice");
            d.add(i, j, c);
        }
    }
    d
}

/// Rank of the differential on a slice, computed block by block: `[m]` and
/// `[n]` shift `m` and `n` by elements of `Δ` and `Δ^v`, so the classes of
/// `m` modulo `ZΔ` and `n` modulo `ZΔ^v` are preserved.
fn blocked_rank(
    p: &Prepared,
    blocks: &(Quotient, Quotient),
    from: &[BasisElement],
    to: &[BasisElement],
) -> usize {
    if from.is_empty() || to.is_empty() {
        return 0;
    }
    let d = differential(p, from, to);
    let mut groups: BTreeMap<(Vec<i64>, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (i, e) in from.iter().enumerate() {
        groups
            .entry((blocks.0.class(&e.m), blocks.1.class(&e.n)))
            .or_default()
            .push(i);
    }
    groups
        .into_par_iter()
        .map(|(_, rows)| {
            let mut sub = SparseMatrix::new(rows.len(), to.len());
            for (k, &i) in rows.iter().enumerate() {
                for (j, v) in d.row_entries(i) {
                    sub.add(k, j, v.clone());
                }
            }
            sub.rank()
        })
        .sum()
}

fn quotients(p: &Prepared) -> (Quotient, Quotient) {
    (
        Quotient::new(p.data.rank(), p.data.delta()),
        Quotient::new(p.data.rank(), p.data.delta_dual()),
    )
}

/// `dim ker d - dim im d` at one bidegree.
pub fn cohomology_dim(
    data: &ToricMirrorData,
    variant: ComplexVariant,
    coh: i64,
    conf: i64,
) -> Result<usize> {
    check_cy(data)?;
    let p = Prepared::new(data, variant);
    let (a, b) = p.needs(coh - 1..=coh + 1, conf..=conf);
    let cache = PointCache::new(&p, a, b)?;
    let blocks = quotients(&p);
    let prev = build_basis(&p, &cache, coh - 1, conf);
    let here = build_basis(&p, &cache, coh, conf);
    let next = build_basis(&p, &cache, coh + 1, conf);
    let out_rank = blocked_rank(&p, &blocks, &here, &next);
    let in_rank = blocked_rank(&p, &blocks, &prev, &here);
    Ok(here.len() - out_rank - in_rank)
}

/// Whether `d ∘ d = 0` from bidegree `(coh, conf)` two steps up.
pub fn check_d_squared(
    data: &ToricMirrorData,
    variant: ComplexVariant,
    coh: i64,
    conf: i64,
) -> Result<bool> {
    let s0 = build_slice(data, variant, coh, conf)?;
    let s1 = build_slice(data, variant, coh + 1, conf)?;
    let s2 = build_slice(data, variant, coh + 2, conf)?;
    let d0 = differential_matrix(data, &s0, &s1)?;
    let d1 = differential_matrix(data, &s1, &s2)?;
    Ok(d0.mul(&d1).is_zero())
}

/// Cohomology dimensions on the window `[-margin, ĉ + margin]^2`.
pub fn bigraded_table(
    data: &ToricMirrorData,
    variant: ComplexVariant,
    margin: i64,
) -> Result<HodgeTable> {
    check_cy(data)?;
    let p = Prepared::new(data, variant);
    let c_hat = data.central_charge();
    let lo = -margin;
    let hi = c_hat + margin;
    let (a, b) = p.needs(lo - 1..=hi + 1, lo..=hi);
    let cache = PointCache::new(&p, a, b)?;
    let blocks = quotients(&p);
    let lines: Vec<Vec<(i64, i64, usize)>> = (lo..=hi)
        .into_par_iter()
        .map(|conf| {
            let slices: Vec<Vec<BasisElement>> = (lo - 1..=hi + 1)
                .map(|coh| build_basis(&p, &cache, coh, conf))
                .collect();
            let ranks: Vec<usize> = (0..slices.len() - 1)
                .map(|i| blocked_rank(&p, &blocks, &slices[i], &slices[i + 1]))
                .collect();
            (lo..=hi)
                .map(|coh| {
                    let i = (coh - lo + 1) as usize;
                    (coh, conf, slices[i].len() - ranks[i] - ranks[i - 1])
                })
                .collect()
        })
        .collect();
    let mut table = HodgeTable::new(rat_int(c_hat));
    for (coh, conf, dim) in lines.into_iter().flatten() {
        table.add(rat_int(coh), rat_int(conf), dim);
    }
    Ok(table)
}

/// Bidegree of a basis element under a variant.
pub fn bidegree(data: &ToricMirrorData, variant: ComplexVariant, e: &BasisElement) -> (i64, i64) {
    Prepared::new(data, variant).bidegree(e)
}
