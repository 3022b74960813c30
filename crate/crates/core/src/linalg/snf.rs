use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * a * v == d`, with `d` diagonal and each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if d[b].abs() <= d[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for j in 0..m.cols() {
        let v = &m[(source, j)] * factor;
        m[(target, j)] -= v;
    }
}

fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for i in 0..m.rows() {
        let v = &m[(i, source)] * factor;
        m[(i, target)] -= v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let v = -m[(i, j)].clone();
        m[(i, j)] = v;
    }
}

/// Smith normal form by pivoting on the entry of least absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        while let Some((pi, pj)) = smallest_nonzero(&d, t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&p);
                add_row_multiple(&mut d, i, t, &q);
                add_row_multiple(&mut u, i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&p);
                add_col_multiple(&mut d, j, t, &q);
                add_col_multiple(&mut v, j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    add_row_multiple(&mut d, t, i, &minus_one);
                    add_row_multiple(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }

    debug_assert_eq!(u.mul(a).mul(&v), d, "Smith form identity violated");
    SmithForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn already_diagonal() {
        let a = IntMatrix::from_i64(&[vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]);
        assert_eq!(check(&a).d, a);
    }

    #[test]
    fn upper_triangular_example() {
        let a = IntMatrix::from_i64(&[vec![2, 1], vec![0, 2]]);
        assert_eq!(check(&a).diagonal(), vec![BigInt::from(1), BigInt::from(4)]);
    }

    #[test]
    fn rectangular_and_singular() {
        check(&IntMatrix::from_i64(&[vec![2, 4, 6], vec![4, 8, 12]]));
        check(&IntMatrix::from_i64(&[vec![0, 0], vec![0, 0], vec![6, 4]]));
        check(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
    }
}
