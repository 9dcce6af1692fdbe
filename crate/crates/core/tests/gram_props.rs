mod common;

use common::{all_bits, endpoint, sys, words_up_to};
use lightleaf_core::gram::{
    det_epsilon_all, det_epsilon_product, gamma_of, RootSource, ShapovalovContext, Sign, SignedRootMonomial,
};
use lightleaf_core::lightleaves::Expression;
use proptest::prelude::*;

#[test]
fn all_ones_of_a_reduced_word_has_gamma_one() {
    for name in ["A2", "B2", "G2", "A3"] {
        let s = sys(name);
        for w in s.finite_elements(100).unwrap() {
            let word = s.reduced_word(&w);
            let expr = Expression::new(&s, word.clone()).unwrap();
            let rec = expr.symbols(&vec![1; word.len()]).unwrap();
            assert_eq!(gamma_of(&rec), SignedRootMonomial::one());
            // y = w is expressed only by the all-ones vector.
            assert_eq!(det_epsilon_product(&expr, &w, 20).unwrap(), SignedRootMonomial::one());
        }
    }
}

#[test]
fn shapovalov_exponents_match_brute_force_counts() {
    let s = sys("A2");
    let roots = s.finite_positive_roots(10).unwrap();
    for word in words_up_to(2, 5) {
        let expr = Expression::new(&s, word.clone()).unwrap();
        let ctx = ShapovalovContext::new(&s);
        for (y, det) in det_epsilon_all(&expr, 20).unwrap() {
            let shap = ctx.det(&expr, &y);
            assert_eq!(shap.sign(), Sign::Undetermined);
            for beta in &roots {
                let z = s.multiply(&s.reflection_for_root(beta).unwrap(), &y);
                let expected = if s.length(&z) > s.length(&y) {
                    all_bits(word.len()).iter().filter(|b| endpoint(&s, &word, b) == z).count() as i64
                } else {
                    0
                };
                assert_eq!(shap.exponent(beta), expected);
                assert_eq!(det.exponent(beta), expected, "{word:?} {y:?}");
            }
        }
    }
}

fn named_word() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    prop_oneof![
        prop::collection::vec(0usize..2, 0..9).prop_map(|w| ("G2", w)),
        prop::collection::vec(0usize..3, 0..8).prop_map(|w| ("B3", w)),
        prop::collection::vec(0usize..2, 0..9).prop_map(|w| ("affineA1", w)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn epsilon_product_matches_shapovalov((name, word) in named_word()) {
        let s = sys(name);
        let expr = Expression::new(&s, word).unwrap();
        let counts = expr.endpoint_counts();
        let reach = ShapovalovContext::with_source(&s, RootSource::ReachableEndpoints).unwrap();
        let full = ShapovalovContext::with_source(&s, RootSource::FullPositiveSystem).ok();
        for (y, det) in det_epsilon_all(&expr, 20).unwrap() {
            prop_assert!(det.is_polynomial());
            prop_assert!(det.sign() != Sign::Undetermined);
            let shap = reach.det_from_counts(&counts, &y);
            prop_assert!(det.same_magnitude(&shap));
            if let Some(full) = &full {
                prop_assert_eq!(&full.det_from_counts(&counts, &y), &shap);
            }
        }
    }
}
