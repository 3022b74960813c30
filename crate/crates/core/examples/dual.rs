//! The Berglund-Hübsch dual of a chain potential with its grading group:
//! `W^T` and `G^v`, written back out as an input document.
//!
//! cargo run --example dual

use bhk_mirror::model::{grading_subgroup, Potential};
use bhk_mirror::verify::BhDatum;

fn main() -> bhk_mirror::Result<()> {
    // x^3 y + y^4 + z^4 + w^4: a chain block and three Fermat blocks
    let w = Potential::new(
        vec![
            vec![3, 1, 0, 0],
            vec![0, 4, 0, 0],
            vec![0, 0, 4, 0],
            vec![0, 0, 0, 4],
        ],
        None,
    )?;
    let datum = BhDatum::new(w.clone(), grading_subgroup(&w)?)?;
    let dual = datum.dual()?;
    println!(
        "W   = {}   |G|   = {}",
        datum.potential.describe(),
        datum.group.order()
    );
    println!(
        "W^T = {}   |G^v| = {}",
        dual.potential.describe(),
        dual.group.order()
    );
    println!(
        "|G| |G^v| = {} = |det A_W|",
        datum.group.order() * dual.group.order()
    );

    let back = dual.dual()?;
    println!("(G^v)^v = G: {}", back.group.same_elements(&datum.group));
    println!(
        "\n{}",
        serde_json::to_string_pretty(&dual.to_input_json()).expect("serializes")
    );
    Ok(())
}
