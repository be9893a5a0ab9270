mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn six_functors_preserve_short_exact_sequences(seed in any::<u64>()) {
        if let Err(w) = common::check_exactness(seed) {
            prop_assert!(false, "{}", w);
        }
    }
}
