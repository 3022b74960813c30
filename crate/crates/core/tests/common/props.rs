//! The structural properties, each checked on one instance. Shared by the
//! property tests and the acceptance run.

use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;
use proptest::sample::Index;

use bhk_mirror::battery::admissible_groups;
use bhk_mirror::complex::{bigraded_table, check_d_squared, ComplexVariant};
use bhk_mirror::linalg::{Rat, RatMatrix};
use bhk_mirror::milnor::{orbifold_a_table, orbifold_b_table};
use bhk_mirror::model::{
    aut_group, dual_group, subgroup_closure, GroupElement, Potential, SymmetryGroup,
};
use bhk_mirror::unified::ToricMirrorData;

use super::{block_pool, cy_pool};

/// A Calabi-Yau type pair with its admissible groups.
pub struct CyCase {
    pub potential: Potential,
    pub groups: Vec<SymmetryGroup>,
}

pub fn cy_cases() -> &'static [CyCase] {
    static CASES: OnceLock<Vec<CyCase>> = OnceLock::new();
    CASES.get_or_init(|| {
        cy_pool(3, &[2, 3, 4, 5, 6], 1)
            .into_iter()
            .map(|p| {
                let groups = admissible_groups(&p).expect("groups");
                CyCase {
                    potential: p,
                    groups,
                }
            })
            .filter(|c| !c.groups.is_empty())
            .collect()
    })
}

/// Potentials with their full symmetry groups, for the group properties.
pub fn aut_cases() -> &'static [(Potential, SymmetryGroup)] {
    static CASES: OnceLock<Vec<(Potential, SymmetryGroup)>> = OnceLock::new();
    CASES.get_or_init(|| {
        block_pool(3, &[2, 3, 4, 5])
            .into_iter()
            .map(|p| {
                let aut = aut_group(&p).expect("Aut(W)");
                (p, aut)
            })
            .collect()
    })
}

pub fn pick<'a, T>(items: &'a [T], i: &Index) -> &'a T {
    &items[i.index(items.len())]
}

/// Nonzero rationals `n/m` with `|n| <= 9`, `1 <= m <= 5`.
pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=5, any::<bool>())
        .prop_map(|(n, m, neg)| Rat::new(if neg { -n } else { n }.into(), m.into()))
}

pub fn toric(p: &Potential, g: &SymmetryGroup) -> ToricMirrorData {
    ToricMirrorData::from_bh(p, g, None).expect("Calabi-Yau type")
}

/// `d ∘ d = 0` from bidegree `(coh, conf)` in one of the four complexes.
pub fn d_squared_vanishes(
    case: &CyCase,
    g: &Index,
    variant: &Index,
    coh: i64,
    conf: i64,
) -> Result<(), String> {
    let data = toric(&case.potential, pick(&case.groups, g));
    let v = *pick(&ComplexVariant::all(), variant);
    match check_d_squared(&data, v, coh, conf) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!(
            "d^2 != 0 for {:?} {v:?} at ({coh}, {conf})",
            case.potential.exponents()
        )),
        Err(e) => Err(e.to_string()),
    }
}

/// `G^v` by its defining pairing: the `h'` in `Aut(W^T)` with
/// `h'^T A_W h ∈ Z` for every generator `h` of `G`.
pub fn dual_by_pairing(p: &Potential, g: &SymmetryGroup) -> SymmetryGroup {
    let t = p.transpose().expect("transpose");
    let a = RatMatrix::from_i64(p.exponents());
    let members: Vec<GroupElement> = aut_group(&t)
        .expect("Aut(W^T)")
        .elements()
        .filter(|h2| {
            g.generators().iter().all(|h| {
                let ah = a.mul_vec(h.h());
                h2.h()
                    .iter()
                    .zip(&ah)
                    .map(|(x, y)| x * y)
                    .sum::<Rat>()
                    .is_integer()
            })
        })
        .cloned()
        .collect();
    subgroup_closure(&t, &members).expect("closure")
}

fn subgroup(p: &Potential, aut: &SymmetryGroup, picks: &[Index]) -> SymmetryGroup {
    let elements: Vec<&GroupElement> = aut.elements().collect();
    let gens: Vec<GroupElement> = picks
        .iter()
        .map(|i| (*pick(&elements, i)).clone())
        .collect();
    subgroup_closure(p, &gens).expect("closure")
}

/// `G^v` matches the pairing definition, `(G^v)^v = G` and `|G| |G^v| = |det A_W|`.
pub fn dual_group_laws(case: &Index, picks: &[Index]) -> Result<(), String> {
    let (p, aut) = pick(aut_cases(), case);
    let g = subgroup(p, aut, picks);
    let dual = dual_group(p, &g).map_err(|e| e.to_string())?;
    let name = format!("{:?} with |G| = {}", p.exponents(), g.order());
    if !dual.same_elements(&dual_by_pairing(p, &g)) {
        return Err(format!(
            "{name}: dual group differs from the pairing definition"
        ));
    }
    let back = dual_group(&p.transpose().unwrap(), &dual).map_err(|e| e.to_string())?;
    if !back.same_elements(&g) {
        return Err(format!("{name}: (G^v)^v != G"));
    }
    if (g.order() * dual.order()) as i64 != p.det().abs() {
        return Err(format!(
            "{name}: |G| |G^v| = {} but |det| = {}",
            g.order() * dual.order(),
            p.det().abs()
        ));
    }
    Ok(())
}

/// Complex-engine A and B are related by `Q_- -> ĉ - Q_-`, all entries lie
/// in `[0, ĉ]^2`, and the same holds for the orbifold tables.
pub fn reflection_and_square(case: &CyCase, g: &Index) -> Result<(), String> {
    let group = pick(&case.groups, g);
    let data = toric(&case.potential, group);
    let name = format!(
        "{:?} with |G| = {}",
        case.potential.exponents(),
        group.order()
    );
    let a = bigraded_table(&data, ComplexVariant::A, 1).map_err(|e| e.to_string())?;
    let b = bigraded_table(&data, ComplexVariant::B, 1).map_err(|e| e.to_string())?;
    if a != b.reflect_minus() {
        return Err(format!("{name}: A {a} is not B {b} reflected"));
    }
    for t in [&a, &b] {
        if !t.outside_square().is_empty() {
            return Err(format!(
                "{name}: entries outside the square: {:?}",
                t.outside_square()
            ));
        }
    }
    let ob = orbifold_b_table(&case.potential, group).map_err(|e| e.to_string())?;
    let oa = orbifold_a_table(&case.potential, group).map_err(|e| e.to_string())?;
    if !ob.outside_square().is_empty()
        || !oa.outside_square().is_empty()
        || oa != ob.reflect_minus()
    {
        return Err(format!(
            "{name}: orbifold tables leave the square or fail the reflection"
        ));
    }
    Ok(())
}

/// Rescaling the coefficients of `W` and `W^T` leaves every table unchanged.
pub fn rescaling_invariance(case: &CyCase, g: &Index, f: &[Rat], gc: &[Rat]) -> Result<(), String> {
    assert!(f.iter().chain(gc).all(|x| !x.is_zero()));
    let group = pick(&case.groups, g);
    let d = case.potential.dim();
    let (f, gc) = (&f[..d], &gc[..d]);
    let data = toric(&case.potential, group);
    let scaled = data
        .with_coefficients(f.to_vec(), gc.to_vec())
        .map_err(|e| e.to_string())?;
    let name = format!(
        "{:?} with f = {f:?}, g = {gc:?}",
        case.potential.exponents()
    );
    for v in ComplexVariant::all() {
        let before = bigraded_table(&data, v, 1).map_err(|e| e.to_string())?;
        let after = bigraded_table(&scaled, v, 1).map_err(|e| e.to_string())?;
        if before != after {
            return Err(format!(
                "{name}: {v:?} table changes from {before} to {after}"
            ));
        }
    }
    let p2 = case
        .potential
        .with_coefficients(f.to_vec())
        .map_err(|e| e.to_string())?;
    let before = orbifold_b_table(&case.potential, group).map_err(|e| e.to_string())?;
    let after = orbifold_b_table(&p2, group).map_err(|e| e.to_string())?;
    if before != after {
        return Err(format!("{name}: orbifold table changes"));
    }
    Ok(())
}
