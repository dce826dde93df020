use chiforge_core::sidon::*;
use chiforge_core::CoreError;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn frozen_bh_values() {
    assert!(is_bh_set(&[1, 2, 5], 3).unwrap().is_valid());
    assert!(is_bh_set(&[1, 4, 16, 64], 3).unwrap().is_valid());
    assert_eq!(is_bh_set(&[1, 2, 3], 3).unwrap(), BhVerdict::Collision(vec![1, 2, 2], vec![1, 1, 3]));
    assert_eq!(greedy_bh(3, 3, 16, &[1, 2]).unwrap().elements(), &[1, 2, 5]);
    // Lexicographically first sets used by the odd-girth plans.
    assert_eq!(greedy_bh(5, 5, u64::MAX / 4, &[1, 2]).unwrap().elements(), &[1, 2, 7, 32, 109]);
    assert_eq!(greedy_bh(7, 7, u64::MAX / 4, &[1, 2]).unwrap().elements(), &[1, 2, 9, 58, 257, 1154, 4182]);
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(is_bh_set(&[2, 1], 3).is_err());
    assert!(is_bh_set(&[0, 1], 3).is_err());
    assert!(matches!(greedy_bh(4, 3, 6, &[1, 2]), Err(CoreError::BhExhausted { .. })));
    assert!(BhSet::new(vec![1, 2, 3], 3, 10).is_err());
}

#[test]
fn seeded_fact_suites() {
    for h in 3..=6 {
        let r = run_fact_trials(h, 200, 2024).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.clique_trials, 200);
        assert_eq!(r.cycle_trials, 200);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bh_sets_are_sidon(seed in any::<u64>(), h in 3usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_bh_set(&mut rng, h, 5, 500).unwrap();
        prop_assert!(is_bh_set(s.elements(), 2).unwrap().is_valid());
        for lower in 2..h {
            prop_assert!(is_bh_set(s.elements(), lower).unwrap().is_valid());
        }
    }

    #[test]
    fn clique_witness_gaps_match(seed in any::<u64>(), h in 3usize..=6, picks in proptest::collection::vec(any::<bool>(), 6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_bh_set(&mut rng, h, 6, 500).unwrap();
        let chain: Vec<u64> = s.elements().iter().zip(&picks).filter(|p| *p.1).map(|p| *p.0).collect();
        prop_assume!(chain.len() >= 2);
        let gaps: Vec<u64> = chain.windows(2).map(|w| w[1] - w[0]).collect();
        let b = clique_fact_witness(&s, &gaps).unwrap();
        let got: Vec<u64> = b.windows(2).map(|w| w[1] - w[0]).collect();
        let mut rev = got.clone();
        rev.reverse();
        prop_assert!(got == gaps || rev == gaps);
        // All interval sums are differences of the returned elements.
        for i in 0..gaps.len() {
            for j in i..gaps.len() {
                let sum: u64 = gaps[i..=j].iter().sum();
                prop_assert!(difference_set(&s).contains(sum));
            }
        }
    }
}
