//! Exact integer and rational linear algebra.
//!
//! Everything here is exact: integers are arbitrary precision and rationals
//! are kept in lowest terms. Dense matrices back the small lattice
//! computations; [`sparse`] handles the large differential matrices.

mod hnf;
mod matrix;
mod snf;
pub mod sparse;

pub use hnf::hermite_normal_form;
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use snf::{smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

pub fn is_integral(x: &Rat) -> bool {
    x.is_integer()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn to_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> Int {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Primitive integer vector on the ray through `v` (zero stays zero).
pub fn primitive_integer(v: &[Rat]) -> Vec<Int> {
    let l = denominator_lcm(v);
    let ints: Vec<Int> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn abs_int(x: &Int) -> Int {
    x.abs()
}

/// Rank over the rationals (dense Gaussian elimination).
pub fn rat_rank(a: &RatMatrix) -> usize {
    a.rank()
}

/// Solves `a * x = b`; `None` when the system is inconsistent.
pub fn rat_solve(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    a.solve(b)
}
