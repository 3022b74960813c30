//! Invertible potentials, their diagonal symmetry groups and the dual
//! overlattice description of a choice of group.

pub mod group;
pub mod lattice;
mod potential;

pub use group::{
    aut_group, exponential_grading_element, is_symmetry, sl_subgroup, subgroup_closure,
    GroupElement, SymmetryGroup,
};
pub use lattice::{cy_check, dual_group, grading_subgroup, lattice_data, CyReport, LatticeData};
pub use potential::{Potential, WeightSystem};
