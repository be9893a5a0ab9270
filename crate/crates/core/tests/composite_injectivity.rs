mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composites_with_independent_maps_are_injective(seed in any::<u64>()) {
        if let Err(w) = common::check_composite_injectivity(seed) {
            prop_assert!(false, "{}", w);
        }
    }
}
