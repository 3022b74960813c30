//! Graded Milnor ring of a chain potential, and the cohomology of the
//! logarithmic Koszul complex on `C[x, y]_0 ⊗ Λ*` that reproduces it.
//!
//! cargo run --example milnor_bridge

use num_traits::One;

use bhk_mirror::linalg::Rat;
use bhk_mirror::milnor::{log_jacobian_cohomology, milnor_dims};
use bhk_mirror::model::Potential;

fn main() -> bhk_mirror::Result<()> {
    // x^2 y + y^3 + z^3
    let w = Potential::new(vec![vec![2, 1, 0], vec![0, 3, 0], vec![0, 0, 3]], None)?;
    let m = milnor_dims(&w, &[0, 1, 2]);
    let product: Rat = w.q().iter().map(|q| q.recip() - Rat::one()).product();
    println!("W = {}", w.describe());
    println!(
        "Milnor dims by weighted degree: {:?}",
        m.dims
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect::<Vec<_>>()
    );
    println!(
        "total {} = Π(1/q - 1) = {product}; palindromic about {}: {}",
        m.total(),
        &m.socle / Rat::from_integer(2.into()),
        m.is_palindromic()
    );

    let shift: Rat = w.q().iter().sum();
    let h = log_jacobian_cohomology(&w, &(&m.socle + &shift));
    println!("log-Jacobian cohomology (c, r) -> dim:");
    for ((c, r), n) in &h {
        println!("  ({c}, {r}) -> {n}");
    }
    Ok(())
}
