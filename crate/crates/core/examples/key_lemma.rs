//! Ideal-membership witnesses for the rays of `K_N^v`: each ray monomial
//! `[l v]` written as a combination of the generators `Σ f(m)(m·n)[m]`, with
//! the admissibility constraints on every multiplier.
//!
//! cargo run --example key_lemma

use bhk_mirror::model::{grading_subgroup, Potential};
use bhk_mirror::unified::{key_lemma_witness, WitnessProblem};
use bhk_mirror::verify::{bh_degree_bound, BhDatum};

fn main() -> bhk_mirror::Result<()> {
    let w = Potential::new(vec![vec![3, 1, 0], vec![0, 2, 0], vec![0, 0, 4]], None)?;
    let g = grading_subgroup(&w)?;
    let datum = BhDatum::new(w, g)?;
    let bound = bh_degree_bound(&datum);
    let problem = WitnessProblem::from_bh(&datum.potential, &datum.group)?;
    println!(
        "W = {}, {} rays, degree bound {bound}",
        datum.potential.describe(),
        problem.ray_count()
    );
    for r in 0..problem.ray_count() {
        match key_lemma_witness(&problem, r, &bound)? {
            Some(wit) => {
                println!(
                    "ray {:?}: [{} x ray] at degree {}, {} terms, re-verified: {}",
                    wit.ray,
                    wit.multiple,
                    wit.degree,
                    wit.size(),
                    wit.verify(&problem)
                );
                for (n, poly) in &wit.polys {
                    let terms: Vec<String> =
                        poly.iter().map(|(m, c)| format!("{c}·[{m:?}]")).collect();
                    println!("    P_{n} = {}", terms.join(" + "));
                }
            }
            None => println!("ray {r}: no witness within the bound"),
        }
    }
    Ok(())
}
