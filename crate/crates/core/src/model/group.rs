use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{frac, smith_normal_form, Rat};

use super::Potential;

/// Default cap on enumerated group orders.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// Diagonal symmetry `x_j -> exp(2 pi i h_j) x_j`, stored with `0 <= h_j < 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(Vec<Rat>);

impl GroupElement {
    pub fn new(h: Vec<Rat>) -> Self {
        GroupElement(h.iter().map(frac).collect())
    }

    pub fn identity(d: usize) -> Self {
        GroupElement(vec![Rat::zero(); d])
    }

    pub fn h(&self) -> &[Rat] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        GroupElement::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement::new(self.0.iter().map(|a| -a).collect())
    }

    /// Indices with `h_j = 0`.
    pub fn fixed_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&j| self.0[j].is_zero()).collect()
    }

    /// Whether `sum_j h_j` is an integer, i.e. determinant one.
    pub fn in_sl(&self) -> bool {
        self.0.iter().sum::<Rat>().is_integer()
    }

    /// Weight of the exponent vector `a` under this element, `sum_j a_j h_j`.
    pub fn phase(&self, a: &[i64]) -> Rat {
        self.0
            .iter()
            .zip(a)
            .map(|(h, &e)| h * Rat::from_integer(BigInt::from(e)))
            .sum()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `true` when every monomial of `W` is fixed: `sum_j a_ij h_j` integral for all `i`.
pub fn is_symmetry(p: &Potential, h: &[Rat]) -> bool {
    h.len() == p.dim()
        && p.exponents().iter().all(|row| {
            row.iter()
                .zip(h)
                .map(|(&a, x)| x * Rat::from_integer(BigInt::from(a)))
                .sum::<Rat>()
                .is_integer()
        })
}

/// A finite group of diagonal symmetries of a potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    dim: usize,
    generators: Vec<GroupElement>,
    elements: BTreeSet<GroupElement>,
}

impl SymmetryGroup {
    pub fn trivial(d: usize) -> Self {
        SymmetryGroup {
            dim: d,
            generators: Vec::new(),
            elements: [GroupElement::identity(d)].into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &SymmetryGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn in_sl(&self) -> bool {
        self.generators.iter().all(GroupElement::in_sl)
    }

    pub fn same_elements(&self, other: &SymmetryGroup) -> bool {
        self.elements == other.elements
    }

    /// Invariant factors of the group (the nontrivial Smith diagonal entries).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let lattice = super::lattice::overlattice_basis(self.dim, &self.generators);
        // N_0 = Z^d written in the basis of N
        let inv = lattice.inverse().expect("overlattice basis is invertible");
        let coords = inv.to_int().expect("N_0 has integral coordinates in N");
        smith_normal_form(&coords)
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_one())
            .collect()
    }
}

/// Smallest subgroup of `Aut(W)` containing `generators`.
pub fn subgroup_closure(p: &Potential, generators: &[GroupElement]) -> Result<SymmetryGroup> {
    subgroup_closure_capped(p, generators, DEFAULT_ORDER_CAP)
}

pub fn subgroup_closure_capped(
    p: &Potential,
    generators: &[GroupElement],
    cap: usize,
) -> Result<SymmetryGroup> {
    let d = p.dim();
    for g in generators {
        if g.dim() != d {
            return Err(Error::ElementLength {
                expected: d,
                got: g.dim(),
            });
        }
        if !is_symmetry(p, g.h()) {
            return Err(Error::NotASymmetry(g.to_string()));
        }
    }
    let gens: Vec<GroupElement> = generators
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    // the order is the index of Z^d in Z^d + sum Z g, known before enumerating
    let covolume = super::lattice::overlattice_basis(d, &gens).det().abs();
    if covolume.recip() > Rat::from_integer(cap.into()) {
        return Err(Error::GroupTooLarge(cap));
    }
    let mut elements = BTreeSet::new();
    let identity = GroupElement::identity(d);
    elements.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(e) = queue.pop_front() {
        for g in &gens {
            let next = e.add(g);
            if elements.insert(next.clone()) {
                if elements.len() > cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(SymmetryGroup {
        dim: d,
        generators: gens,
        elements,
    })
}

/// `Aut(W) = M_0^v / N_0`, generated through the Smith form of `A_W`.
pub fn aut_group(p: &Potential) -> Result<SymmetryGroup> {
    let snf = smith_normal_form(&p.exponent_matrix());
    let d = p.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        let di = snf.d[(i, i)].clone();
        if di.is_one() {
            continue;
        }
        let h = (0..d)
            .map(|j| Rat::new(snf.v[(j, i)].clone(), di.clone()))
            .collect();
        gens.push(GroupElement::new(h));
    }
    subgroup_closure(p, &gens)
}

/// `x_j -> exp(2 pi i q_j) x_j`.
pub fn exponential_grading_element(p: &Potential) -> GroupElement {
    GroupElement::new(p.q().to_vec())
}

/// `SL_d ∩ Aut(W)`.
pub fn sl_subgroup(p: &Potential) -> Result<SymmetryGroup> {
    let aut = aut_group(p)?;
    let gens: Vec<GroupElement> = aut.elements().filter(|g| g.in_sl()).cloned().collect();
    let mut group = subgroup_closure(p, &gens)?;
    group.generators = minimal_generators(&group);
    Ok(group)
}

/// Greedy generating set: keep an element only if it enlarges the span so far.
pub fn minimal_generators(group: &SymmetryGroup) -> Vec<GroupElement> {
    let d = group.dim;
    let mut span: BTreeSet<GroupElement> = [GroupElement::identity(d)].into();
    let mut gens = Vec::new();
    for g in group.elements.iter().rev() {
        if span.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let mut queue: VecDeque<GroupElement> = span.iter().cloned().collect();
        while let Some(e) = queue.pop_front() {
            for x in &gens {
                let next = e.add(x);
                if span.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn cubic() -> Potential {
        Potential::fermat(&[3, 3, 3]).unwrap()
    }

    #[test]
    fn aut_group_orders() {
        let g = aut_group(&cubic()).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.invariant_factors(), vec![BigInt::from(3); 3]);
        let chain = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        assert_eq!(aut_group(&chain).unwrap().order(), 4);
        let line = Potential::new(vec![vec![1]], None).unwrap();
        assert_eq!(aut_group(&line).unwrap().order(), 1);
    }

    #[test]
    fn closure_examples() {
        let p = cubic();
        assert_eq!(subgroup_closure(&p, &[]).unwrap().order(), 1);
        let j = GroupElement::new(vec![rat(1, 3); 3]);
        let g = subgroup_closure(&p, &[j]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.invariant_factors(), vec![BigInt::from(3)]);
        let bad = GroupElement::new(vec![rat(1, 2), rat(0, 1), rat(0, 1)]);
        assert!(matches!(
            subgroup_closure(&p, &[bad]),
            Err(Error::NotASymmetry(_))
        ));
    }

    #[test]
    fn closure_respects_cap() {
        let p = cubic();
        let gens: Vec<GroupElement> = aut_group(&p).unwrap().generators().to_vec();
        assert_eq!(
            subgroup_closure_capped(&p, &gens, 10),
            Err(Error::GroupTooLarge(10))
        );
    }

    #[test]
    fn exponential_grading() {
        assert_eq!(
            exponential_grading_element(&cubic()),
            GroupElement::new(vec![rat(1, 3); 3])
        );
        let p = Potential::fermat(&[2, 2]).unwrap();
        assert_eq!(
            exponential_grading_element(&p),
            GroupElement::new(vec![rat(1, 2); 2])
        );
        let chain = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        assert_eq!(
            exponential_grading_element(&chain),
            GroupElement::new(vec![rat(1, 4), rat(1, 2)])
        );
    }

    #[test]
    fn sl_part_of_cubic() {
        let g = sl_subgroup(&cubic()).unwrap();
        assert_eq!(g.order(), 9);
        assert!(g.contains(&exponential_grading_element(&cubic())));
        assert_eq!(minimal_generators(&g).len(), 2);
    }
}
