//! Sparse fraction-free elimination.
//!
//! Rows are scaled to primitive integer vectors and reduced against an
//! echelon basis keyed by leading column. After every combination the row
//! content is divided out, which keeps entries small on the matrices that
//! arise from differentials and Jacobian slices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{denominator_lcm, Rat};

type IntRow = Vec<(usize, BigInt)>;

/// Matrix stored as one sorted list of `(column, value)` pairs per row.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, Rat>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `value` to entry `(row, col)`.
    pub fn add(&mut self, row: usize, col: usize, value: Rat) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        if value.is_zero() {
            return;
        }
        let slot = self.entries[row]
            .entry(col)
            .or_insert_with(BigRational::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries[row].remove(&col);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rat {
        self.entries[row]
            .get(&col)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn row_entries(&self, row: usize) -> impl Iterator<Item = (usize, &Rat)> {
        self.entries[row].iter().map(|(c, v)| (*c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &other.entries[*k] {
                    out.add(i, *j, a * b);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<IntRow> = self
            .entries
            .iter()
            .filter(|r| !r.is_empty())
            .map(to_int_row)
            .collect();
        rows.sort_by_key(Vec::len);
        let mut echelon = Echelon::default();
        for row in rows {
            echelon.insert(row);
        }
        echelon.rank()
    }

    /// Solves `self * x = b` exactly; free unknowns are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "right-hand side has the wrong length");
        let rhs = self.cols;
        let mut rows: Vec<IntRow> = Vec::with_capacity(self.rows);
        for (row, value) in self.entries.iter().zip(b) {
            let mut full = row.clone();
            if !value.is_zero() {
                full.insert(rhs, value.clone());
            }
            if !full.is_empty() {
                rows.push(to_int_row(&full));
            }
        }
        rows.sort_by_key(Vec::len);
        let mut echelon = Echelon::default();
        for row in rows {
            echelon.insert(row);
        }
        if echelon.pivots.contains_key(&rhs) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (&lead, row) in echelon.pivots.iter().rev() {
            let mut acc = BigRational::zero();
            let mut lead_value = BigRational::zero();
            for (c, v) in row {
                let v = BigRational::from_integer(v.clone());
                if *c == lead {
                    lead_value = v;
                } else if *c == rhs {
                    acc += v;
                } else {
                    acc -= v * &x[*c];
                }
            }
            x[lead] = acc / lead_value;
        }
        Some(x)
    }
}

fn to_int_row(row: &BTreeMap<usize, Rat>) -> IntRow {
    let l = BigRational::from_integer(denominator_lcm(row.values()));
    let mut out: IntRow = row
        .iter()
        .map(|(c, v)| (*c, (v * &l).to_integer()))
        .collect();
    remove_content(&mut out);
    out
}

fn remove_content(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a * x - b * y` for sorted sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon basis over the integers, keyed by leading column.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    /// Reduces `row` and keeps it when independent; returns whether it was kept.
    pub fn insert(&mut self, mut row: IntRow) -> bool {
        while let Some((lead, lv)) = row.first().map(|(c, v)| (*c, v.clone())) {
            let Some(pivot) = self.pivots.get(&lead) else {
                break;
            };
            let pv = &pivot[0].1;
            let g = pv.gcd(&lv);
            let (a, b) = (pv / &g, &lv / &g);
            row = combine(&a, &row, &b, pivot);
            remove_content(&mut row);
        }
        match row.first() {
            Some(&(lead, ref v)) => {
                if v.is_negative() {
                    for (_, x) in row.iter_mut() {
                        *x = -x.clone();
                    }
                }
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int, RatMatrix};

    fn from_dense(m: &RatMatrix) -> SparseMatrix {
        let mut s = SparseMatrix::new(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                s.add(i, j, m[(i, j)].clone());
            }
        }
        s
    }

    #[test]
    fn rank_matches_dense() {
        let m = RatMatrix::from_i64(&[
            vec![1, 2, 0, 3],
            vec![2, 4, 0, 6],
            vec![0, 1, 1, 0],
            vec![1, 3, 1, 3],
        ]);
        assert_eq!(from_dense(&m).rank(), m.rank());
        assert_eq!(from_dense(&m).rank(), 2);
    }

    #[test]
    fn solve_with_fractions() {
        let m = RatMatrix::from_i64(&[vec![2, 1], vec![0, 2]]);
        let x = from_dense(&m).solve(&[rat_int(1), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat(1, 4), rat(1, 2)]);
        let z = SparseMatrix::new(1, 1);
        assert_eq!(z.solve(&[rat_int(1)]), None);
    }

    #[test]
    fn underdetermined_solution_reproduces_rhs() {
        let m = RatMatrix::from_i64(&[vec![1, 1, 1], vec![0, 2, 3]]);
        let b = vec![rat(1, 2), rat_int(5)];
        let x = from_dense(&m).solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn product_of_sparse() {
        let a = RatMatrix::from_i64(&[vec![1, 2], vec![0, 1]]);
        let b = RatMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let p = from_dense(&a).mul(&from_dense(&b));
        assert_eq!(p.get(0, 0), rat_int(2));
        assert_eq!(p.get(0, 1), rat_int(1));
        assert_eq!(p.get(1, 0), rat_int(1));
        assert_eq!(p.get(1, 1), rat_int(0));
    }
}
