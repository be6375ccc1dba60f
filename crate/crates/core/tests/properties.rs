mod common;

use fuzzypolar::cli::document;
use fuzzypolar::linalg::Vector;
use fuzzypolar::polar;
use fuzzypolar::rational::frac;
use fuzzypolar::{DualPair, StepFuzzySet};
use proptest::prelude::*;

fn chain(seed: u64, dim: usize) -> StepFuzzySet {
    common::any_chain(&mut common::rng(seed), dim)
}

fn probes(seed: u64, dim: usize) -> Vec<Vector> {
    let mut rng = common::rng(seed ^ 0x5eed);
    (0..12).map(|_| common::lattice_vector(&mut rng, dim, &frac(1, 2), 8)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sup_and_inf_are_pointwise(a in any::<u64>(), b in any::<u64>(), dim in 1usize..=2) {
        let (mu, eta) = (chain(a, dim), chain(b, dim));
        let (hi, lo) = (mu.sup(&eta).unwrap(), mu.inf(&eta).unwrap());
        prop_assert!(hi.same_function(&eta.sup(&mu).unwrap()).unwrap());
        prop_assert!(lo.leq(&mu).unwrap() && mu.leq(&hi).unwrap());
        for x in probes(a ^ b, dim) {
            let (m, e) = (mu.membership(&x).unwrap(), eta.membership(&x).unwrap());
            prop_assert_eq!(hi.membership(&x).unwrap(), m.clone().max(e.clone()));
            prop_assert_eq!(lo.membership(&x).unwrap(), m.min(e));
        }
    }

    #[test]
    fn scaling_composes(seed in any::<u64>(), dim in 1usize..=2, p in 1i64..=4, q in -3i64..=3) {
        prop_assume!(q != 0);
        let mu = chain(seed, dim);
        let (s, t) = (frac(p, 2), frac(q, 3));
        let twice = mu.scalar_mul(&s).unwrap().scalar_mul(&t).unwrap();
        prop_assert!(twice.same_function(&mu.scalar_mul(&(&s * &t)).unwrap()).unwrap());
    }

    #[test]
    fn polar_matches_pointwise_evaluation(seed in any::<u64>(), dim in 1usize..=2) {
        let mu = chain(seed, dim);
        let pair = DualPair::standard(dim);
        let p = polar::fuzzy_polar(&mu, &pair).unwrap();
        for xp in probes(seed, dim) {
            prop_assert_eq!(p.membership(&xp).unwrap(), polar::fuzzy_polar_at(&mu, &xp, &pair).unwrap());
        }
    }

    #[test]
    fn polars_are_fixed_by_the_third_polar(seed in any::<u64>(), dim in 1usize..=2) {
        let mu = chain(seed, dim);
        let pair = DualPair::standard(dim);
        let p = polar::fuzzy_polar(&mu, &pair).unwrap();
        let ppp = polar::fuzzy_polar(&polar::bipolar(&mu, &pair).unwrap(), &pair).unwrap();
        prop_assert!(p.same_function(&ppp).unwrap());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), dim in 1usize..=3) {
        let mu = chain(seed, dim);
        let text = document::write_document(&mu, None);
        let back = document::parse_document(&text).unwrap().set;
        prop_assert_eq!(&back, &mu);
        prop_assert_eq!(document::write_document(&back, None), text);
    }
}
