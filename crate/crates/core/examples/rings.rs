//! The B and A tables of the elliptic cubic `(x^3 + y^3 + z^3, <J>)` from
//! both engines: the lattice complexes and the orbifolded Milnor rings.
//!
//! cargo run --example rings

use bhk_mirror::complex::{bigraded_table, ComplexVariant};
use bhk_mirror::milnor::{orbifold_a_table, orbifold_b_table};
use bhk_mirror::model::{grading_subgroup, Potential};
use bhk_mirror::unified::ToricMirrorData;

fn main() -> bhk_mirror::Result<()> {
    let w = Potential::fermat(&[3, 3, 3])?;
    let g = grading_subgroup(&w)?;
    let data = ToricMirrorData::from_bh(&w, &g, None)?;

    // window [-1, ĉ + 1]^2: entries outside [0, ĉ]^2 would show up as anomalies
    let b = bigraded_table(&data, ComplexVariant::B, 1)?;
    let a = bigraded_table(&data, ComplexVariant::A, 1)?;
    println!("complex engine  B: {b}");
    println!("complex engine  A: {a}");
    println!("orbifold engine B: {}", orbifold_b_table(&w, &g)?);
    println!("orbifold engine A: {}", orbifold_a_table(&w, &g)?);
    println!("\nB as a diamond:\n{}", b.grid().unwrap_or_default());
    println!("machine-readable: {}", b.to_json());
    Ok(())
}
