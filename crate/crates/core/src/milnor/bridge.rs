//! The complex `C[x, y]_0 ⊗ Λ*(e_1, ..., e_d)` with
//! `d = Σ x_i ∂_i F ⊗ contr(e_i^v) + Σ y_i ⊗ (e_i ∧)`.
//!
//! Gradings: `c = wt(x) + |y|` rises by one under `d`; `r = wt(x) - |y| + |S|`
//! is preserved. The class `P · Π x_i ⊗ 1` sits at `c = r = deg P + Σ q_i`.

use std::collections::{BTreeMap, HashMap};

use super::{monomials_by_degree, IntWeights, Monomial};
use crate::complex::exterior::{contraction_terms, subsets_of_size, wedge_terms, Wedge};
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{rat_int, Rat};
use crate::model::Potential;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Element {
    x: Monomial,
    y: Monomial,
    wedge: Wedge,
}

struct Bridge<'a> {
    p: &'a Potential,
    w: IntWeights,
    /// x-monomials by scaled weight.
    xs: Vec<Vec<Monomial>>,
    /// y-monomials by total degree.
    ys: Vec<Vec<Monomial>>,
}

impl<'a> Bridge<'a> {
    fn new(p: &'a Potential, c_max: i64) -> Bridge<'a> {
        let d = p.dim();
        let w = IntWeights::new(p.q());
        let vars: Vec<usize> = (0..d).collect();
        let xs = monomials_by_degree(d, &vars, &w, c_max);
        let unit = IntWeights {
            scale: 1,
            w: vec![1; d],
        };
        let ys = monomials_by_degree(d, &vars, &unit, c_max / w.scale + 1);
        Bridge { p, w, xs, ys }
    }

    /// Basis at scaled gradings `(c, r)`.
    fn basis(&self, c: i64, r: i64) -> Vec<Element> {
        let d = self.p.dim();
        let l = self.w.scale;
        let mut out = Vec::new();
        for s in 0..=d {
            // wt(x) = (c + r - s L) / 2, |y| L = (c - r + s L) / 2
            let wx2 = c + r - s as i64 * l;
            let wy2 = c - r + s as i64 * l;
            if wx2 < 0 || wy2 < 0 || wx2 % 2 != 0 || wy2 % 2 != 0 || (wy2 / 2) % l != 0 {
                continue;
            }
            let (wx, ny) = ((wx2 / 2) as usize, (wy2 / 2 / l) as usize);
            let (Some(xs), Some(ys)) = (self.xs.get(wx), self.ys.get(ny)) else {
                continue;
            };
            let wedges = subsets_of_size(d, s);
            for x in xs {
                for y in ys {
                    if x.iter().zip(y).any(|(a, b)| *a > 0 && *b > 0) {
                        continue;
                    }
                    for &wedge in &wedges {
                        out.push(Element {
                            x: x.clone(),
                            y: y.clone(),
                            wedge,
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn images(&self, e: &Element) -> Vec<(Element, Rat)> {
        let d = self.p.dim();
        let mut out = Vec::new();
        // x_i ∂_i F = Σ_rows a_{row,i} c_row x^{row}
        for i in 0..d {
            let mut lambda = vec![0; d];
            lambda[i] = 1;
            let contracted = contraction_terms(e.wedge, &lambda);
            if contracted.is_empty() {
                continue;
            }
            for (row, coeff) in self.p.exponents().iter().zip(self.p.coefficients()) {
                if row[i] == 0 || row.iter().zip(&e.y).any(|(a, b)| *a > 0 && *b > 0) {
                    continue;
                }
                let x: Monomial = e.x.iter().zip(row).map(|(a, b)| a + b).collect();
                for &(w, sign) in &contracted {
                    out.push((
                        Element {
                            x: x.clone(),
                            y: e.y.clone(),
                            wedge: w,
                        },
                        coeff * rat_int(row[i] * sign),
                    ));
                }
            }
        }
        for i in 0..d {
            if e.x[i] > 0 {
                continue;
            }
            let mut v = vec![0; d];
            v[i] = 1;
            let mut y = e.y.clone();
            y[i] += 1;
            for (w, sign) in wedge_terms(e.wedge, &v) {
                out.push((
                    Element {
                        x: e.x.clone(),
                        y: y.clone(),
                        wedge: w,
                    },
                    rat_int(sign),
                ));
            }
        }
        out
    }

    fn rank(&self, from: &[Element], to: &[Element]) -> usize {
        if from.is_empty() || to.is_empty() {
            return 0;
        }
        let index: HashMap<&Element, usize> = to.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut m = SparseMatrix::new(from.len(), to.len());
        for (i, e) in from.iter().enumerate() {
            for (t, c) in self.images(e) {
                m.add(i, index[&t], c);
            }
        }
        m.rank()
    }

    fn d_squared_is_zero(&self, c: i64, r: i64) -> bool {
        let b0 = self.basis(c, r);
        let b1 = self.basis(c + self.w.scale, r);
        let b2 = self.basis(c + 2 * self.w.scale, r);
        let mat = |from: &[Element], to: &[Element]| {
            let index: HashMap<&Element, usize> =
                to.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let mut m = SparseMatrix::new(from.len(), to.len());
            for (i, e) in from.iter().enumerate() {
                for (t, v) in self.images(e) {
                    m.add(i, index[&t], v);
                }
            }
            m
        };
        mat(&b0, &b1).mul(&mat(&b1, &b2)).is_zero()
    }
}

/// Cohomology dimensions at every bigrading `(c, r)` with `c <= c_max`,
/// zero entries omitted.
pub fn log_jacobian_cohomology(p: &Potential, c_max: &Rat) -> BTreeMap<(Rat, Rat), usize> {
    let w = IntWeights::new(p.q());
    let c_top = (c_max * Rat::from_integer(w.scale.into()))
        .floor()
        .to_integer();
    let c_top: i64 = num_traits::ToPrimitive::to_i64(&c_top).expect("small degree");
    let bridge = Bridge::new(p, c_top + w.scale);
    let l = w.scale;
    let d = p.dim() as i64;
    let mut out = BTreeMap::new();
    for c in 0..=c_top {
        // r ranges over wt(x) - |y| + |S| with wt(x) + |y| = c
        for r in (-c)..=(c + d * l) {
            let here = bridge.basis(c, r);
            if here.is_empty() {
                continue;
            }
            let next = bridge.basis(c + l, r);
            let prev = if c >= l {
                bridge.basis(c - l, r)
            } else {
                Vec::new()
            };
            let h = here.len() - bridge.rank(&here, &next) - bridge.rank(&prev, &here);
            if h > 0 {
                out.insert((w.to_rat(c), w.to_rat(r)), h);
            }
        }
    }
    out
}

/// `d ∘ d = 0` on all slices with `c <= c_max`.
pub fn log_jacobian_d_squared(p: &Potential, c_max: &Rat) -> bool {
    let w = IntWeights::new(p.q());
    let c_top: i64 = num_traits::ToPrimitive::to_i64(
        &(c_max * Rat::from_integer(w.scale.into()))
            .floor()
            .to_integer(),
    )
    .unwrap();
    let bridge = Bridge::new(p, c_top + 2 * w.scale);
    let d = p.dim() as i64;
    (0..=c_top).all(|c| ((-c)..=(c + d * w.scale)).all(|r| bridge.d_squared_is_zero(c, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::milnor_dims;

    #[test]
    fn cubic_cohomology_is_the_shifted_milnor_ring() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let m = milnor_dims(&p, &[0, 1, 2]);
        let shift: Rat = p.q().iter().sum();
        let top = &m.socle + &shift;
        let h = log_jacobian_cohomology(&p, &top);
        let expected: BTreeMap<(Rat, Rat), usize> = m
            .dims
            .iter()
            .map(|(s, &n)| ((s + &shift, s + &shift), n))
            .collect();
        assert_eq!(h, expected);
        assert!(log_jacobian_d_squared(&p, &top));
    }

    #[test]
    fn chain_cohomology() {
        let p = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        let m = milnor_dims(&p, &[0, 1]);
        let shift: Rat = p.q().iter().sum();
        let h = log_jacobian_cohomology(&p, &(&m.socle + &shift));
        let expected: BTreeMap<(Rat, Rat), usize> = m
            .dims
            .iter()
            .map(|(s, &n)| ((s + &shift, s + &shift), n))
            .collect();
        assert_eq!(h, expected);
    }
}
