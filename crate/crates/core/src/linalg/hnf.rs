use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for j in 0..m.cols() {
        let v = &m[(source, j)] * factor;
        m[(target, j)] -= v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let v = -m[(i, j)].clone();
        m[(i, j)] = v;
    }
}

/// Row-style Hermite normal form: returns `(h, u)` with `h == u * a`, `u`
/// unimodular, `h` upper echelon with positive pivots and the entries above
/// each pivot reduced into `[0, pivot)`. Zero rows end up at the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&x, &y| h[(x, c)].abs().cmp(&h[(y, c)].abs()));
            let Some(p) = pivot else {
                break;
            };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                add_row_multiple(&mut h, i, r, &q);
                add_row_multiple(&mut u, i, r, &q);
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                add_row_multiple(&mut h, i, r, &q);
                add_row_multiple(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    debug_assert_eq!(u.mul(a), h, "Hermite form identity violated");
    (h, u)
}
