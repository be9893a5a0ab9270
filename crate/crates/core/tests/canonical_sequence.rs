mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_sequence_has_projective_kernel(seed in any::<u64>()) {
        if let Err(w) = common::check_canonical_ses(seed) {
            prop_assert!(false, "{}", w);
        }
    }
}
