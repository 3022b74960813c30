mod common;

use proptest::prelude::*;
use proptest::sample::Index;

use bhk_mirror::linalg::Rat;
use bhk_mirror::milnor::log_jacobian_d_squared;

use common::props::{
    cy_cases, d_squared_vanishes, dual_group_laws, nonzero_rat, pick, reflection_and_square,
    rescaling_invariance,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complex_differential_squares_to_zero(
        case in any::<Index>(),
        g in any::<Index>(),
        variant in any::<Index>(),
        coh in -2i64..=2,
        conf in -1i64..=2,
    ) {
        let res = d_squared_vanishes(pick(cy_cases(), &case), &g, &variant, coh, conf);
        prop_assert!(res.is_ok(), "{}", res.unwrap_err());
    }

    #[test]
    fn log_jacobian_differential_squares_to_zero(case in any::<Index>(), top in 0i64..=3) {
        let p = &pick(cy_cases(), &case).potential;
        prop_assert!(log_jacobian_d_squared(p, &Rat::from_integer(top.into())));
    }

    #[test]
    fn dual_group_is_an_involution_of_complementary_order(
        case in any::<Index>(),
        picks in prop::collection::vec(any::<Index>(), 0..=2),
    ) {
        let res = dual_group_laws(&case, &picks);
        prop_assert!(res.is_ok(), "{}", res.unwrap_err());
    }

    #[test]
    fn a_is_b_reflected_inside_the_square(case in any::<Index>(), g in any::<Index>()) {
        let res = reflection_and_square(pick(cy_cases(), &case), &g);
        prop_assert!(res.is_ok(), "{}", res.unwrap_err());
    }

    #[test]
    fn tables_ignore_coefficient_rescaling(
        case in any::<Index>(),
        g in any::<Index>(),
        f in prop::collection::vec(nonzero_rat(), 3),
        gc in prop::collection::vec(nonzero_rat(), 3),
    ) {
        let res = rescaling_invariance(pick(cy_cases(), &case), &g, &f, &gc);
        prop_assert!(res.is_ok(), "{}", res.unwrap_err());
    }
}
