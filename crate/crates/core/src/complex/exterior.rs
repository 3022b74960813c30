//! Exterior algebra on a lattice basis `b_0, ..., b_{r-1}`, with wedge
//! monomials stored as bitmasks of strictly increasing index sets.

pub type Wedge = u32;

pub fn degree(s: Wedge) -> usize {
    s.count_ones() as usize
}

/// `v ∧ b_S` expanded in the basis: `(S ∪ {i}, sign · v_i)` for `i ∉ S`, with
/// sign `(-1)^{#{j ∈ S : j < i}}`.
pub fn wedge_terms(s: Wedge, v: &[i64]) -> Vec<(Wedge, i64)> {
    let mut out = Vec::new();
    for (i, &vi) in v.iter().enumerate() {
        let bit = 1 << i;
        if vi == 0 || s & bit != 0 {
            continue;
        }
        let before = (s & (bit - 1)).count_ones();
        let sign = if before.is_multiple_of(2) { 1 } else { -1 };
        out.push((s | bit, sign * vi));
    }
    out
}

/// Contraction of `b_S` by the covector `λ`: `Σ_t (-1)^{t-1} λ(b_{i_t}) b_{S - i_t}`.
pub fn contraction_terms(s: Wedge, lambda: &[i64]) -> Vec<(Wedge, i64)> {
    let mut out = Vec::new();
    let mut t = 0;
    for (i, &li) in lambda.iter().enumerate() {
        let bit = 1 << i;
        if s & bit == 0 {
            continue;
        }
        if li != 0 {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            out.push((s & !bit, sign * li));
        }
        t += 1;
    }
    out
}

/// All subsets of `{0, ..., rank-1}` of size `k`, in increasing order.
pub fn subsets_of_size(rank: usize, k: usize) -> Vec<Wedge> {
    (0..(1u32 << rank)).filter(|s| degree(*s) == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn apply(
        terms: &[(Wedge, i64)],
        op: impl Fn(Wedge) -> Vec<(Wedge, i64)>,
    ) -> BTreeMap<Wedge, i64> {
        let mut out = BTreeMap::new();
        for &(s, c) in terms {
            for (t, d) in op(s) {
                *out.entry(t).or_insert(0) += c * d;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    #[test]
    fn wedge_squares_to_zero() {
        let v = [1, 2, -1];
        for s in 0..8 {
            let once = wedge_terms(s, &v);
            assert!(apply(&once, |t| wedge_terms(t, &v)).is_empty());
        }
    }

    #[test]
    fn contraction_squares_to_zero() {
        let l = [3, -1, 2];
        for s in 0..8 {
            let once = contraction_terms(s, &l);
            assert!(apply(&once, |t| contraction_terms(t, &l)).is_empty());
        }
    }

    #[test]
    fn cartan_identity() {
        // contr(λ) ∘ (v ∧) + (v ∧) ∘ contr(λ) = λ(v) · id
        let v = [1, 0, 2];
        let l = [2, 5, -1];
        let lv: i64 = v.iter().zip(&l).map(|(a, b)| a * b).sum();
        for s in 0..8 {
            let mut total = apply(&wedge_terms(s, &v), |t| contraction_terms(t, &l));
            for (t, c) in apply(&contraction_terms(s, &l), |t| wedge_terms(t, &v)) {
                *total.entry(t).or_insert(0) += c;
            }
            total.retain(|_, c| *c != 0);
            let expected: BTreeMap<Wedge, i64> = if lv == 0 {
                BTreeMap::new()
            } else {
                [(s, lv)].into()
            };
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(3, 0), vec![0]);
    }
}
