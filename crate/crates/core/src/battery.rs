//! A fixed family of small invertible potentials built from Fermat, chain
//! and loop blocks, with all their Calabi-Yau type groups.

use crate::error::Result;
use crate::model::{
    exponential_grading_element, sl_subgroup, subgroup_closure, Potential, SymmetryGroup,
};

/// Named exponent matrices (rows are monomials).
pub fn candidates() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    vec![
        ("x^2+y^2", vec![vec![2, 0], vec![0, 2]]),
        (
            "x^3+y^3+z^3",
            vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]],
        ),
        (
            "x^3+y^2z+z^3",
            vec![vec![3, 0, 0], vec![0, 2, 1], vec![0, 0, 3]],
        ),
        (
            "x^2y+y^2x+z^3",
            vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 3]],
        ),
        (
            "x^2y+y^2z+z^2x",
            vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]],
        ),
        (
            "x^6+y^3+z^2",
            vec![vec![6, 0, 0], vec![0, 3, 0], vec![0, 0, 2]],
        ),
        (
            "x^4+y^4+z^2",
            vec![vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 2]],
        ),
        (
            "x^2+y^2+z^2+w^2",
            vec![
                vec![2, 0, 0, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 2, 0],
                vec![0, 0, 0, 2],
            ],
        ),
        (
            "x^4+y^4+z^4+w^4",
            vec![
                vec![4, 0, 0, 0],
                vec![0, 4, 0, 0],
                vec![0, 0, 4, 0],
                vec![0, 0, 0, 4],
            ],
        ),
        (
            "x^3y+y^3x+z^4+w^4",
            vec![
                vec![3, 1, 0, 0],
                vec![1, 3, 0, 0],
                vec![0, 0, 4, 0],
                vec![0, 0, 0, 4],
            ],
        ),
        (
            "x^3y+y^4+z^4+w^4",
            vec![
                vec![3, 1, 0, 0],
                vec![0, 4, 0, 0],
                vec![0, 0, 4, 0],
                vec![0, 0, 0, 4],
            ],
        ),
        (
            "x^3+y^3+z^6+w^6",
            vec![
                vec![3, 0, 0, 0],
                vec![0, 3, 0, 0],
                vec![0, 0, 6, 0],
                vec![0, 0, 0, 6],
            ],
        ),
    ]
}

/// Every group `H` with `<J> ⊆ H ⊆ SL ∩ Aut(W)` generated by `J` and one
/// further element, plus `SL ∩ Aut(W)` itself, sorted by order. Empty when
/// `J` is not in `SL`.
pub fn admissible_groups(p: &Potential) -> Result<Vec<SymmetryGroup>> {
    let j = exponential_grading_element(p);
    let sl = sl_subgroup(p)?;
    if !sl.contains(&j) {
        return Ok(Vec::new());
    }
    let mut groups: Vec<SymmetryGroup> = Vec::new();
    let mut push = |g: SymmetryGroup| {
        if !groups.iter().any(|h| h.same_elements(&g)) {
            groups.push(g);
        }
    };
    push(subgroup_closure(p, std::slice::from_ref(&j))?);
    for g in sl.elements() {
        push(subgroup_closure(p, &[j.clone(), g.clone()])?);
    }
    push(sl);
    groups.sort_by_key(SymmetryGroup::order);
    Ok(groups)
}

/// A potential with the groups used for it.
#[derive(Clone, Debug)]
pub struct BatteryEntry {
    pub name: &'static str,
    pub potential: Potential,
    pub groups: Vec<SymmetryGroup>,
}

/// Candidates with at least two admissible groups; at most `max_groups`
/// per potential, always including the smallest and the largest.
pub fn battery(max_groups: usize) -> Result<Vec<BatteryEntry>> {
    let mut out = Vec::new();
    for (name, matrix) in candidates() {
        let potential = Potential::new(matrix, None)?;
        let mut groups = admissible_groups(&potential)?;
        if groups.len() < 2 {
            continue;
        }
        if groups.len() > max_groups.max(2) {
            let last = groups.pop().expect("nonempty");
            groups.truncate(max_groups.max(2) - 1);
            groups.push(last);
        }
        out.push(BatteryEntry {
            name,
            potential,
            groups,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_groups() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let orders: Vec<usize> = admissible_groups(&p)
            .unwrap()
            .iter()
            .map(SymmetryGroup::order)
            .collect();
        assert_eq!(orders, vec![3, 9]);
    }

    #[test]
    fn groups_contain_j_and_lie_in_sl() {
        for (_, m) in candidates() {
            let p = Potential::new(m, None).unwrap();
            let j = exponential_grading_element(&p);
            for g in admissible_groups(&p).unwrap() {
                assert!(g.contains(&j) && g.in_sl());
            }
        }
    }
}
