use num_traits::ToPrimitive;

use crate::cone::Point;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Classes of `Z^r` modulo the sublattice spanned by a set of vectors.
///
/// With `U A V = D` for the generator rows `A`, the sublattice is
/// `Z^k D V^{-1}`, so `x` is determined modulo it by `(x V)_i mod d_i`.
pub struct Quotient {
    v: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl Quotient {
    pub fn new(rank: usize, generators: &[Point]) -> Quotient {
        let a = IntMatrix::from_i64(generators);
        let snf = smith_normal_form(&a);
        let v = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| snf.v[(i, j)].to_i64().expect("small transform"))
                    .collect()
            })
            .collect();
        let d = (0..rank)
            .map(|i| {
                if i < generators.len() {
                    snf.d[(i, i)].to_i64().expect("small invariant factor")
                } else {
                    0
                }
            })
            .collect();
        Quotient { v, d }
    }

    pub fn class(&self, x: &[i64]) -> Vec<i64> {
        let r = self.d.len();
        (0..r)
            .map(|j| {
                let y: i64 = (0..r).map(|i| x[i] * self.v[i][j]).sum();
                let dj = self.d[j].abs();
                if dj == 0 {
                    y
                } else {
                    y.rem_euclid(dj)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_modulo_index_three() {
        let q = Quotient::new(2, &[vec![3, 0], vec![0, 1]]);
        assert_eq!(q.class(&[1, 0]), q.class(&[4, 7]));
        assert_ne!(q.class(&[1, 0]), q.class(&[2, 0]));
        assert_eq!(q.class(&[3, 5]), q.class(&[0, 0]));
    }

    #[test]
    fn rank_deficient_generators_keep_free_part() {
        let q = Quotient::new(2, &[vec![1, 1]]);
        assert_eq!(q.class(&[2, 2]), q.class(&[0, 0]));
        assert_ne!(q.class(&[1, 0]), q.class(&[0, 0]));
    }
}
