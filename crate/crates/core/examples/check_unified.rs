//! Both finiteness conditions on Batyrev-Borisov data for the cubic curve:
//! `Δ` the lattice points of the reflexive triangle at height one, `Δ^v` the
//! vertices of its polar together with the origin.
//!
//! cargo run --example check_unified

use bhk_mirror::linalg::rat_int;
use bhk_mirror::unified::{default_degree_bound, unified_condition, ToricMirrorData};

fn main() -> bhk_mirror::Result<()> {
    let mut delta = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 - a {
            delta.push(vec![1, a, b]);
        }
    }
    let delta_dual = vec![vec![0, 1, 0], vec![0, 0, 1], vec![3, -1, -1], vec![1, 0, 0]];
    let data = ToricMirrorData::new(
        3,
        delta,
        delta_dual,
        vec![1, 1, 1],
        vec![1, 0, 0],
        None,
        None,
    )?;

    let bound = default_degree_bound(&data);
    let report = unified_condition(&data, &bound)?;
    println!("degree bound {bound}:\n{}", report.render());

    // with nothing to search the verdict is FAIL-UNKNOWN, never FAIL
    let empty = unified_condition(&data, &rat_int(0))?;
    println!("degree bound 0: {}", empty.status());
    Ok(())
}
