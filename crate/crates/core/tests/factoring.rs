mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn maps_between_sides_factor_through_glue_projective(seed in any::<u64>()) {
        if let Err(w) = common::check_factoring(seed) {
            prop_assert!(false, "{}", w);
        }
    }
}
