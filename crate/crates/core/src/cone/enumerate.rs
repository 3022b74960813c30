//! Lattice points of a cone on a hyperplane `φ = s`.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{dot, Cone, Point};
use crate::error::{Error, Result};
use crate::linalg::{denominator_lcm, Rat, RatMatrix};

/// Cap on the number of candidate points examined by one enumeration.
pub const MAX_CANDIDATES: u64 = 50_000_000;

/// `φ` and `s` scaled to integers with a common factor.
fn integer_functional(phi: &[Rat], s: &Rat) -> (Vec<i64>, Option<i64>) {
    let l = Rat::from_integer(denominator_lcm(phi.iter().chain(std::iter::once(s))));
    let phi: Vec<i64> = phi
        .iter()
        .map(|x| (x * &l).to_integer().to_i64().expect("small functional"))
        .collect();
    let s = (s * &l).to_integer().to_i64();
    (phi, s)
}

/// All lattice points `x` of `cone` with `φ·x = s`, sorted lexicographically.
///
/// `φ` must be strictly positive on every nonzero point of the cone, which
/// is checked on the extreme rays.
pub fn slice_points(cone: &Cone, phi: &[Rat], s: &Rat) -> Result<Vec<Point>> {
    if phi.len() != cone.rank() {
        return Err(Error::InvalidData("functional has the wrong length".into()));
    }
    let (phi_i, s_i) = integer_functional(phi, s);
    let weights: Vec<i64> = cone.generators().iter().map(|g| dot(&phi_i, g)).collect();
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::FunctionalNotPositive);
    }
    if s.is_negative() {
        return Ok(Vec::new());
    }
    if s.is_zero() {
        return Ok(vec![vec![0; cone.rank()]]);
    }
    let s_i = s_i.ok_or_else(|| Error::ConeCapExceeded("slice value exceeds 64 bits".into()))?;
    let mut out = if cone.is_simplicial() {
        simplicial_points(cone, &phi_i, s_i)?
    } else {
        box_points(cone, &phi_i, s_i, &weights)?
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Points `w` with `w + shift` in `cone` and `φ·w = s`.
pub fn shifted_slice_points(
    cone: &Cone,
    shift: &[i64],
    phi: &[Rat],
    s: &Rat,
) -> Result<Vec<Point>> {
    let phi_shift: Rat = phi
        .iter()
        .zip(shift)
        .map(|(p, &x)| p * Rat::from_integer(x.into()))
        .sum();
    let pts = slice_points(cone, phi, &(s + phi_shift))?;
    Ok(pts
        .into_iter()
        .map(|x| x.iter().zip(shift).map(|(a, b)| a - b).collect())
        .collect())
}

/// Simplicial cones: coordinates `y_i = f_i·x >= 0` against the facets, with
/// `φ = Σ c_i f_i`, so the slice is `Σ c_i y_i = s` followed by an
/// integrality check of `x = F^{-1} y`.
fn simplicial_points(cone: &Cone, phi: &[i64], s: i64) -> Result<Vec<Point>> {
    let r = cone.rank();
    let f = RatMatrix::from_i64(cone.facets());
    let f_inv = f
        .inverse()
        .expect("facets of a simplicial cone are independent");
    let phi_r: Vec<Rat> = phi.iter().map(|&x| Rat::from_integer(x.into())).collect();
    // φ = c F  =>  c = φ F^{-1}
    let c = f_inv.vec_mul(&phi_r);
    let l = Rat::from_integer(denominator_lcm(&c));
    let w: Vec<i64> = c
        .iter()
        .map(|x| (x * &l).to_integer().to_i64().expect("small weights"))
        .collect();
    let target = (Rat::from_integer(s.into()) * &l)
        .to_integer()
        .to_i64()
        .expect("small target");
    let den = denominator_lcm(f_inv.row_vecs().iter().flatten());
    let f_scaled: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    (&f_inv[(i, j)] * Rat::from_integer(den.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("small inverse")
                })
                .collect()
        })
        .collect();
    let den = den.to_i64().expect("small determinant");
    let mut out = Vec::new();
    let mut y = vec![0i64; r];
    let mut visited = 0u64;
    compositions(&w, 0, target, &mut y, &mut visited, &mut |y| {
        // x = F^{-1} y, rows of F^{-1} scaled by den
        let mut x = Vec::with_capacity(r);
        for row in &f_scaled {
            let v: i64 = row.iter().zip(y).map(|(a, b)| a * b).sum();
            if v % den != 0 {
                return;
            }
            x.push(v / den);
        }
        out.push(x);
    })?;
    Ok(out)
}

fn compositions(
    w: &[i64],
    i: usize,
    remaining: i64,
    y: &mut [i64],
    visited: &mut u64,
    emit: &mut dyn FnMut(&[i64]),
) -> Result<()> {
    *visited += 1;
    if *visited > MAX_CANDIDATES {
        return Err(Error::ConeCapExceeded(format!(
            "more than {MAX_CANDIDATES} slice candidates"
        )));
    }
    if i + 1 == w.len() {
        if remaining % w[i] == 0 {
            y[i] = remaining / w[i];
            emit(y);
        }
        return Ok(());
    }
    for v in 0..=remaining / w[i] {
        y[i] = v;
        compositions(w, i + 1, remaining - v * w[i], y, visited, emit)?;
    }
    y[i] = 0;
    Ok(())
}

/// General cones: the slice is a polytope whose vertices are the rays scaled
/// onto the hyperplane; enumerate its bounding box, solving the pivot
/// coordinate from the hyperplane equation.
fn box_points(cone: &Cone, phi: &[i64], s: i64, weights: &[i64]) -> Result<Vec<Point>> {
    let r = cone.rank();
    let mut lo = vec![i64::MAX; r];
    let mut hi = vec![i64::MIN; r];
    for (g, &w) in cone.generators().iter().zip(weights) {
        for j in 0..r {
            // vertex coordinate g_j * s / w
            let num = g[j] * s;
            lo[j] = lo[j].min(Integer::div_floor(&num, &w));
            hi[j] = hi[j].max(Integer::div_ceil(&num, &w));
        }
    }
    for j in 0..r {
        lo[j] = lo[j].min(0);
        hi[j] = hi[j].max(0);
    }
    let pivot = (0..r)
        .filter(|&j| phi[j] != 0)
        .max_by_key(|&j| hi[j] - lo[j])
        .expect("nonzero functional");
    let free: Vec<usize> = (0..r).filter(|&j| j != pivot).collect();
    let count: u64 = free
        .iter()
        .map(|&j| (hi[j] - lo[j] + 1) as u64)
        .fold(1u64, |a, b| a.saturating_mul(b));
    if count > MAX_CANDIDATES {
        return Err(Error::ConeCapExceeded(format!("{count} slice candidates")));
    }
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let rest: i64 = free.iter().map(|&j| phi[j] * x[j]).sum();
        let num = s - rest;
        if num % phi[pivot] == 0 {
            let v = num / phi[pivot];
            if v >= lo[pivot] && v <= hi[pivot] {
                x[pivot] = v;
                if cone.contains(&x) {
                    out.push(x.clone());
                }
            }
        }
        // odometer over the free coordinates
        let mut advanced = false;
        for &j in &free {
            if x[j] < hi[j] {
                x[j] += 1;
                advanced = true;
                break;
            }
            x[j] = lo[j];
        }
        if !advanced {
            break;
        }
    }
    Ok(out)
}

/// Pairs `(m, n)` with `m` in the slice `φ_M = s_M` of `cm`, `n` in the slice
/// `φ_N = s_N` of `cn`, and `m·n = 0`.
pub fn zero_pairing_pairs(
    cm: &Cone,
    phi_m: &[Rat],
    s_m: &Rat,
    cn: &Cone,
    phi_n: &[Rat],
    s_n: &Rat,
) -> Result<Vec<(Point, Point)>> {
    let ms = slice_points(cm, phi_m, s_m)?;
    let ns = slice_points(cn, phi_n, s_n)?;
    let mut out = Vec::new();
    for m in &ms {
        for n in &ns {
            if dot(m, n) == 0 {
                out.push((m.clone(), n.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    fn ones(r: usize) -> Vec<Rat> {
        vec![rat_int(1); r]
    }

    #[test]
    fn orthant_compositions() {
        let c = Cone::orthant(2);
        let pts = slice_points(&c, &ones(2), &rat_int(2)).unwrap();
        assert_eq!(pts, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(
            slice_points(&c, &ones(2), &rat_int(0)).unwrap(),
            vec![vec![0, 0]]
        );
        assert!(slice_points(&c, &ones(2), &rat(1, 2)).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_positive_functional() {
        let c = Cone::orthant(2);
        assert_eq!(
            slice_points(&c, &[rat_int(1), rat_int(0)], &rat_int(1)),
            Err(Error::FunctionalNotPositive)
        );
    }

    #[test]
    fn simplicial_and_box_agree() {
        let c = Cone::from_integer_generators(2, &[vec![1, 0], vec![1, 3]]).unwrap();
        let phi = vec![rat_int(1), rat_int(0)];
        for s in 0..6 {
            let a = slice_points(&c, &phi, &rat_int(s)).unwrap();
            let weights: Vec<i64> = c.generators().iter().map(|g| g[0]).collect();
            let mut b = if s == 0 {
                vec![vec![0, 0]]
            } else {
                box_points(&c, &[1, 0], s, &weights).unwrap()
            };
            b.sort();
            assert_eq!(a, b);
            assert_eq!(a.len() as i64, 3 * s + 1);
        }
    }

    #[test]
    fn square_cone_slices() {
        let gens = vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]];
        let c = Cone::from_integer_generators(3, &gens).unwrap();
        let phi = vec![rat_int(0), rat_int(0), rat_int(1)];
        // |x| + |y| <= z: 2z^2 + 2z + 1 points at height z
        for z in 0..4 {
            assert_eq!(
                slice_points(&c, &phi, &rat_int(z)).unwrap().len() as i64,
                2 * z * z + 2 * z + 1
            );
        }
    }

    #[test]
    fn zero_pairing_on_orthants() {
        let c = Cone::orthant(2);
        let pairs =
            zero_pairing_pairs(&c, &ones(2), &rat_int(1), &c, &ones(2), &rat_int(1)).unwrap();
        assert_eq!(
            pairs,
            vec![(vec![0, 1], vec![1, 0]), (vec![1, 0], vec![0, 1])]
        );
        let origin =
            zero_pairing_pairs(&c, &ones(2), &rat_int(0), &c, &ones(2), &rat_int(0)).unwrap();
        assert_eq!(origin, vec![(vec![0, 0], vec![0, 0])]);
    }
}
