//! Graded Milnor rings by degree-sliced exact rank, the orbifold B ring
//! built from them, and the logarithmic Koszul complex that links them to
//! the lattice complexes.

pub mod bridge;
mod orbifold;

pub use bridge::{log_jacobian_cohomology, log_jacobian_d_squared};
pub use orbifold::{orbifold_a_table, orbifold_b_table, sector_data, SectorData};

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, ToPrimitive};

use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{denominator_lcm, rat_int, Rat};
use crate::model::Potential;

pub type Monomial = Vec<i64>;

/// Weights scaled to integers: `q_j = w_j / scale`.
#[derive(Clone, Debug)]
pub(crate) struct IntWeights {
    pub scale: i64,
    pub w: Vec<i64>,
}

impl IntWeights {
    pub fn new(q: &[Rat]) -> IntWeights {
        let l = denominator_lcm(q);
        let lr = Rat::from_integer(l.clone());
        let w = q
            .iter()
            .map(|x| (x * &lr).to_integer().to_i64().expect("small weight"))
            .collect();
        IntWeights {
            scale: l.to_i64().expect("small denominator"),
            w,
        }
    }

    pub fn to_rat(&self, d: i64) -> Rat {
        Rat::new(d.into(), self.scale.into())
    }

    pub fn scaled(&self, x: &Rat) -> Option<i64> {
        let v = x * Rat::from_integer(self.scale.into());
        v.is_integer()
            .then(|| v.to_integer().to_i64().expect("small degree"))
    }
}

/// Monomials in the variables `vars` (exponent vectors of full length `d`)
/// of each scaled degree `0..=bound`.
pub(crate) fn monomials_by_degree(
    d: usize,
    vars: &[usize],
    w: &IntWeights,
    bound: i64,
) -> Vec<Vec<Monomial>> {
    let mut out = vec![Vec::new(); (bound.max(-1) + 1) as usize];
    let mut a = vec![0i64; d];
    fn rec(
        vars: &[usize],
        w: &IntWeights,
        bound: i64,
        deg: i64,
        a: &mut Vec<i64>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        match vars.split_first() {
            None => out[deg as usize].push(a.clone()),
            Some((&j, rest)) => {
                let mut e = 0;
                while deg + e * w.w[j] <= bound {
                    a[j] = e;
                    rec(rest, w, bound, deg + e * w.w[j], a, out);
                    e += 1;
                }
                a[j] = 0;
            }
        }
    }
    if bound >= 0 {
        rec(vars, w, bound, 0, &mut a, &mut out);
    }
    out
}

/// The rows of `W` supported on `vars`, as `(exponents, coefficient)`.
pub(crate) fn restricted_terms(p: &Potential, vars: &[usize]) -> Vec<(Monomial, Rat)> {
    p.exponents()
        .iter()
        .zip(p.coefficients())
        .filter(|(row, _)| {
            row.iter()
                .enumerate()
                .all(|(j, &a)| a == 0 || vars.contains(&j))
        })
        .map(|(row, c)| (row.clone(), c.clone()))
        .collect()
}

/// Graded dimensions of `C[x_vars] / (∂_j W_vars)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorDims {
    pub vars: Vec<usize>,
    /// Nonzero dimensions at weighted degrees up to the socle.
    pub dims: BTreeMap<Rat, usize>,
    /// `Σ_{j ∈ vars} (1 - 2 q_j)`.
    pub socle: Rat,
    /// Nothing survives in degrees `(socle, socle + max q_j]`.
    pub window_clean: bool,
    /// `Π_{j ∈ vars} (1/q_j - 1)`.
    pub expected_total: Rat,
}

impl MilnorDims {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn get(&self, degree: &Rat) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.window_clean && Rat::from_integer(self.total().into()) == self.expected_total
    }

    /// `dim_s = dim_{socle - s}` for every degree.
    pub fn is_palindromic(&self) -> bool {
        self.dims
            .iter()
            .all(|(s, &n)| self.get(&(&self.socle - s)) == n)
    }
}

/// Quotient dimensions of one character class, by scaled degree, up to `bound`.
///
/// `keep` selects monomials; it must be constant on the terms of every
/// `x^b ∂_j W` (true for characters of diagonal symmetries of `W`).
pub(crate) fn quotient_dims(
    p: &Potential,
    vars: &[usize],
    w: &IntWeights,
    bound: i64,
    keep: &dyn Fn(&[i64]) -> bool,
) -> Vec<usize> {
    let d = p.dim();
    let terms = restricted_terms(p, vars);
    let monos = monomials_by_degree(d, vars, w, bound);
    // ∂_j W_vars as (monomial, coefficient) lists, with its scaled degree
    let partials: Vec<(i64, Vec<(Monomial, Rat)>)> = vars
        .iter()
        .map(|&j| {
            let list: Vec<(Monomial, Rat)> = terms
                .iter()
                .filter(|(e, _)| e[j] > 0)
                .map(|(e, c)| {
                    let mut m = e.clone();
                    m[j] -= 1;
                    (m, c * rat_int(e[j]))
                })
                .collect();
            (w.scale - w.w[j], list)
        })
        .collect();
    let mut out = Vec::with_capacity(monos.len());
    for (deg, basis) in monos.iter().enumerate() {
        let basis: Vec<&Monomial> = basis.iter().filter(|m| keep(m)).collect();
        if basis.is_empty() {
            out.push(0);
            continue;
        }
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
        for (pd, list) in &partials {
            let md = deg as i64 - pd;
            if md < 0 || list.is_empty() {
                continue;
            }
            for b in &monos[md as usize] {
                let mut row = Vec::with_capacity(list.len());
                for (m, c) in list {
                    let prod: Monomial = b.iter().zip(m).map(|(x, y)| x + y).collect();
                    if let Some(&i) = index.get(&prod) {
                        row.push((i, c.clone()));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        let mut mat = SparseMatrix::new(rows.len(), basis.len());
        for (r, row) in rows.into_iter().enumerate() {
            for (i, c) in row {
                mat.add(r, i, c);
            }
        }
        out.push(basis.len() - mat.rank());
    }
    out
}

pub(crate) fn socle(p: &Potential, vars: &[usize]) -> Rat {
    vars.iter()
        .map(|&j| Rat::one() - rat_int(2) * &p.q()[j])
        .sum()
}

/// Graded Milnor dimensions of `W` restricted to `vars`, checked for
/// vanishing on the window above the socle.
pub fn milnor_dims(p: &Potential, vars: &[usize]) -> MilnorDims {
    let w = IntWeights::new(p.q());
    let soc = socle(p, vars);
    let soc_scaled = w.scaled(&soc).expect("socle lies on the weight lattice");
    let max_w = vars.iter().map(|&j| w.w[j]).max().unwrap_or(0);
    let bound = soc_scaled.max(0) + max_w;
    let all = quotient_dims(p, vars, &w, bound, &|_| true);
    let mut dims = BTreeMap::new();
    let mut window_clean = true;
    for (deg, &n) in all.iter().enumerate() {
        let deg = deg as i64;
        if deg <= soc_scaled {
            if n > 0 {
                dims.insert(w.to_rat(deg), n);
            }
        } else if n > 0 {
            window_clean = false;
        }
    }
    let expected_total = vars
        .iter()
        .map(|&j| p.q()[j].recip() - Rat::one())
        .product();
    MilnorDims {
        vars: vars.to_vec(),
        dims,
        socle: soc,
        window_clean,
        expected_total,
    }
}

/// Whether the Milnor ring of `W` is finite with the expected dimension.
pub fn is_nondegenerate(p: &Potential) -> bool {
    let vars: Vec<usize> = (0..p.dim()).collect();
    milnor_dims(p, &vars).is_nondegenerate()
}
