//! The duality check over the built-in battery of Fermat, chain and loop
//! potentials with every admissible group, using the orbifold engine on
//! both sides (pass `--both` to add the lattice complexes).
//!
//! cargo run --release --example battery -- --both

use bhk_mirror::battery::battery;
use bhk_mirror::verify::{verify_datum, BhDatum, Engine, RunOptions};

fn main() -> bhk_mirror::Result<()> {
    let both = std::env::args().any(|a| a == "--both");
    let engine = if both { Engine::Both } else { Engine::Orbifold };
    let options = RunOptions {
        engine: Some(engine),
        ..RunOptions::default()
    };
    for entry in battery(3)? {
        for g in &entry.groups {
            let datum = BhDatum::new(entry.potential.clone(), g.clone())?;
            let report = verify_datum(&datum, &options).map_err(|f| f.error)?;
            let statuses: Vec<String> = report
                .verdicts
                .iter()
                .map(|v| v.status.to_string())
                .collect();
            println!(
                "{:<22} |G| = {:<3} {}",
                entry.name,
                g.order(),
                statuses.join(" ")
            );
        }
    }
    Ok(())
}
