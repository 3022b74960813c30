mod condition;
mod data;
mod witness;

pub use condition::{
    default_degree_bound, necessary_condition, quotient_scan, side_condition, unified_condition,
    ConditionReport, QuotientScan, RayOutcome, Side, UnifiedReport,
};
pub use data::ToricMirrorData;
pub use witness::{key_lemma_witness, witness_for_multiple, MembershipWitness, WitnessProblem};
