use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;

use super::{milnor_dims, quotient_dims, socle, IntWeights};
use crate::error::{Error, Result};
use crate::linalg::{rat_int, Rat};
use crate::model::{cy_check, GroupElement, Potential, SymmetryGroup};
use crate::table::HodgeTable;

/// The contribution of one group element to the orbifold B ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorData {
    pub g: GroupElement,
    /// Indices with `h_j = 0`.
    pub fixed: Vec<usize>,
    /// `(Σ_{h_j ≠ 0} (h_j - q_j), Σ_{h_j ≠ 0} (1 - h_j - q_j))`.
    pub shift: (Rat, Rat),
    /// Dimensions of the invariant part of the shifted Milnor ring of the
    /// restricted potential, by weighted degree of the Milnor representative.
    pub invariant_dims: BTreeMap<Rat, usize>,
}

/// Invariance of the shifted class `(Π_{j ∈ F} x_j) x^b` under every generator.
fn shifted_class_invariant(group: &SymmetryGroup, fixed: &[usize], b: &[i64]) -> bool {
    group.generators().iter().all(|gen| {
        let h = gen.h();
        fixed
            .iter()
            .map(|&j| &h[j] * rat_int(1 + b[j]))
            .sum::<Rat>()
            .is_integer()
    })
}

pub fn sector_data(p: &Potential, group: &SymmetryGroup, g: &GroupElement) -> Result<SectorData> {
    let fixed = g.fixed_indices();
    let milnor = milnor_dims(p, &fixed);
    if !milnor.is_nondegenerate() {
        return Err(Error::DegenerateSector(fixed));
    }
    let w = IntWeights::new(p.q());
    let soc = w
        .scaled(&socle(p, &fixed))
        .expect("socle lies on the weight lattice");
    let dims = quotient_dims(p, &fixed, &w, soc, &|b| {
        shifted_class_invariant(group, &fixed, b)
    });
    let invariant_dims = dims
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(deg, &n)| (w.to_rat(deg as i64), n))
        .collect();
    let h = g.h();
    let moving: Vec<usize> = (0..p.dim()).filter(|j| !fixed.contains(j)).collect();
    let plus = moving.iter().map(|&j| &h[j] - &p.q()[j]).sum();
    let minus = moving.iter().map(|&j| Rat::one() - &h[j] - &p.q()[j]).sum();
    Ok(SectorData {
        g: g.clone(),
        fixed,
        shift: (plus, minus),
        invariant_dims,
    })
}

/// `(⊕_g L_g)^G` with bicharges `shift + (p, p)`.
pub fn orbifold_b_table(p: &Potential, group: &SymmetryGroup) -> Result<HodgeTable> {
    cy_check(p, group).require()?;
    let elements: Vec<&GroupElement> = group.elements().collect();
    let sectors: Vec<SectorData> = elements
        .par_iter()
        .map(|g| sector_data(p, group, g))
        .collect::<Result<_>>()?;
    let mut table = HodgeTable::new(p.central_charge());
    for s in sectors {
        for (deg, &n) in &s.invariant_dims {
            table.add(&s.shift.0 + deg, &s.shift.1 + deg, n);
        }
    }
    Ok(table)
}

/// The B table with `Q_- -> ĉ - Q_-`.
pub fn orbifold_a_table(p: &Potential, group: &SymmetryGroup) -> Result<HodgeTable> {
    Ok(orbifold_b_table(p, group)?.reflect_minus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{grading_subgroup, sl_subgroup};

    #[test]
    fn cubic_sectors() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let t = orbifold_b_table(&p, &g).unwrap();
        assert_eq!(
            t,
            HodgeTable::from_entries(1, &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])
        );
        let a = orbifold_a_table(&p, &g).unwrap();
        assert_eq!(a, t.reflect_minus());
    }

    #[test]
    fn cubic_with_sl_group() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        let g = sl_subgroup(&p).unwrap();
        let t = orbifold_b_table(&p, &g).unwrap();
        // untwisted xyz and xyz·xyz, plus the two sectors without fixed
        // coordinates; sectors fixing one coordinate contribute nothing
        assert_eq!(
            t,
            HodgeTable::from_entries(1, &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])
        );
    }

    #[test]
    fn non_cy_group_is_rejected() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        assert!(matches!(
            orbifold_b_table(&p, &SymmetryGroup::trivial(3)),
            Err(Error::NotCalabiYau { .. })
        ));
    }

    #[test]
    fn quadric_pair_has_two_classes_at_the_origin() {
        // untwisted xy and the sector of the grading element, both at (0, 0)
        let p = Potential::fermat(&[2, 2]).unwrap();
        let g = grading_subgroup(&p).unwrap();
        let t = orbifold_b_table(&p, &g).unwrap();
        assert_eq!(t, HodgeTable::from_entries(0, &[((0, 0), 2)]));
    }
}
