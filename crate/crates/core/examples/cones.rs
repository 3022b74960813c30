//! Exact building blocks: Smith and Hermite normal forms, a cone and its
//! dual, and the lattice points of a degree slice.
//!
//! cargo run --example cones

use bhk_mirror::cone::{dual_cone, slice_points, Cone};
use bhk_mirror::linalg::{hermite_normal_form, rat_int, smith_normal_form, IntMatrix};

fn main() -> bhk_mirror::Result<()> {
    let a = IntMatrix::from_i64(&[vec![3, 1, 0], vec![0, 2, 0], vec![0, 0, 4]]);
    let snf = smith_normal_form(&a);
    println!(
        "invariant factors of A: {:?}",
        snf.diagonal()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    let (h, _) = hermite_normal_form(&a);
    println!("Hermite form:");
    for row in h.row_vecs() {
        println!(
            "  {:?}",
            row.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let cone = Cone::from_integer_generators(3, &[vec![1, 0, 0], vec![1, 3, 0], vec![1, 0, 3]])?;
    let dual = dual_cone(&cone);
    println!(
        "rays {:?}\nfacet normals {:?}",
        cone.generators(),
        cone.facets()
    );
    println!("dual rays {:?}", dual.generators());

    let phi = vec![rat_int(1), rat_int(0), rat_int(0)];
    for t in 0..=2 {
        let points = slice_points(&cone, &phi, &rat_int(t))?;
        println!("slice {t}: {} lattice points", points.len());
    }
    Ok(())
}
