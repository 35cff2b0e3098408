mod common;

use common::rng;
use ncr_core::measures::{
    all_partitions, indicator_projector, jordan, no_go_check, pairing_identity_check, partition_splitting,
    valid_partitions, MuPartition, SignedMeasure,
};
use ncr_core::{Rational, Scalar};
use proptest::prelude::*;
use rand::Rng;

fn measure_strategy() -> impl Strategy<Value = SignedMeasure> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=7).prop_map(|ws| {
        SignedMeasure::new(ws.into_iter().map(|(p, q)| Rational::new(p, q).unwrap()).collect())
    })
}

proptest! {
    #[test]
    fn jordan_decomposition(mu in measure_strategy()) {
        let (plus, minus) = jordan(&mu);
        prop_assert!(plus.is_nonnegative() && minus.is_nonnegative());
        prop_assert_eq!(&plus - &minus, mu.clone());
        let (sp, sm) = (plus.support(), minus.support());
        prop_assert!(sp.iter().all(|i| !sm.contains(i)));
    }

    #[test]
    fn partition_count(mu in measure_strategy()) {
        let zeros = mu.weights().iter().filter(|w| w.is_zero()).count();
        let parts = valid_partitions(&mu);
        prop_assert_eq!(parts.len(), 1 << zeros);
        prop_assert!(parts.iter().all(|p| p.is_mu_partition(&mu)));
    }

    #[test]
    fn pairing_identity(mu in measure_strategy(), seed: u64) {
        let mut r = rng(seed);
        for part in valid_partitions(&mu) {
            let f: Vec<Rational> = (0..mu.ground_size())
                .map(|_| Rational::new(r.random_range(-9..=9), r.random_range(1..=5)).unwrap())
                .collect();
            prop_assert!(pairing_identity_check(&mu, &part, &f).unwrap());
        }
    }
}

#[test]
fn no_go_exhaustive() {
    for n in 1..=4 {
        let parts = all_partitions(n);
        assert_eq!(parts.len(), 1 << n);
        for m in [1, 2] {
            for a in &parts {
                for b in &parts {
                    assert_eq!(no_go_check(a, b, m).unwrap(), a == b, "{a} vs {b}, m = {m}");
                }
            }
        }
    }
}

#[test]
fn partition_splittings_are_orthogonal() {
    for n in 1..=4 {
        for part in all_partitions(n) {
            for m in [1, 2, 3] {
                let p = indicator_projector::<Rational>(&part, m);
                assert_eq!(p.adjoint(), p);
                let sp = partition_splitting::<Rational>(&part, m);
                let gram = &sp.v().basis().adjoint() * sp.w().basis();
                assert!(gram.is_zero());
            }
        }
    }
}

#[test]
fn zero_weight_points_choose_freely() {
    let mu = SignedMeasure::from_ints(&[0, 2, 0, -1]);
    let parts = valid_partitions(&mu);
    assert_eq!(parts.len(), 4);
    for p in &parts {
        assert!(p.in_plus(1) && !p.in_plus(3));
    }
    assert!(parts.contains(&MuPartition::new(vec![true, true, true, false])));
}
