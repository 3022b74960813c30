//! Weights, symmetry groups, the dual group and the Calabi-Yau test for a
//! loop potential `x^2 y + y^2 z + z^2 x` with its grading group.
//!
//! cargo run --example analyze

use bhk_mirror::model::{
    aut_group, cy_check, dual_group, grading_subgroup, sl_subgroup, Potential,
};

fn main() -> bhk_mirror::Result<()> {
    let w = Potential::new(vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]], None)?;
    println!("W = {}", w.describe());
    println!(
        "weights q = {:?}",
        w.q().iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!("central charge ĉ = {}", w.central_charge());
    println!("|det A_W| = {}", w.det().abs());

    let aut = aut_group(&w)?;
    let sl = sl_subgroup(&w)?;
    let g = grading_subgroup(&w)?;
    let dual = dual_group(&w, &g)?;
    println!("|Aut(W)| = {}, |SL ∩ Aut(W)| = {}", aut.order(), sl.order());
    println!(
        "G = <J> has order {}, G^v has order {}",
        g.order(),
        dual.order()
    );

    let cy = cy_check(&w, &g);
    println!(
        "Calabi-Yau type: {} (deg in M: {}, deg^v in N: {})",
        cy.is_calabi_yau_type(),
        cy.deg_in_m,
        cy.deg_dual_in_n
    );
    Ok(())
}
