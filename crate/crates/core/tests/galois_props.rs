use num_traits::Zero;
use proptest::prelude::*;
use zariski_core::finite_field::{factor_degrees_mod, is_prime_u64};
use zariski_core::galois::{
    has_long_prime_cycle, has_transposition_pattern, is_sn, GaloisAnswer, is_transitive, sumset, GaloisConfig, Stage, SumsetState,
};
use zariski_core::poly::discriminant;
use zariski_core::{DegreeMultiset, Error, IntPolynomial, StreamSeed};
use zariski_oracle::{factor_degrees_brute, is_prime_trial, is_squarefree_brute, subset_sums};

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=6, 1..=8).prop_filter("n <= 16", |p| p.iter().sum::<usize>() <= 16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sumset_matches_enumeration(parts in partition()) {
        let got = sumset(&parts);
        prop_assert_eq!(got.survivors(), &subset_sums(&parts));
    }

    #[test]
    fn factor_degrees_match_trial_division(
        mut c in prop::collection::vec(-20i64..=20, 1..=8),
        qi in 0usize..6,
    ) {
        let q = [2u64, 3, 5, 7, 11, 13][qi];
        c.push(1);
        prop_assume!(is_squarefree_brute(&c, q));
        let got = factor_degrees_mod(&IntPolynomial::from_i64(&c), q).unwrap();
        prop_assert_eq!(got.degrees(), &factor_degrees_brute(&c, q)[..]);
    }

    #[test]
    fn non_squarefree_is_reported(mut c in prop::collection::vec(-20i64..=20, 1..=8), qi in 0usize..6) {
        let q = [2u64, 3, 5, 7, 11, 13][qi];
        c.push(1);
        let result = factor_degrees_mod(&IntPolynomial::from_i64(&c), q);
        if is_squarefree_brute(&c, q) {
            prop_assert!(result.is_ok());
        } else {
            prop_assert_eq!(result, Err(Error::NotSquarefreeMod(q)));
        }
    }

    #[test]
    fn primality_matches_trial_division(n in 0u64..2_000_000) {
        prop_assert_eq!(is_prime_u64(n), is_prime_trial(n));
    }

    #[test]
    fn transitivity_witnesses_are_valid(mut c in prop::collection::vec(-9i64..=9, 1..=7), seed in any::<u64>()) {
        c.push(1);
        let f = IntPolynomial::from_i64(&c);
        prop_assume!(!discriminant(&f).unwrap().is_zero());
        let v = is_transitive(&f, 1e-3, StreamSeed::new(seed), &GaloisConfig::default()).unwrap();
        let n = c.len() - 1;
        let mut common = SumsetState::full(n);
        let mut last = common.survivors().len();
        for w in &v.witnesses {
            prop_assert_eq!(w.stage, Stage::Transitivity);
            prop_assert!(is_prime_u64(w.prime));
            prop_assert_eq!(&factor_degrees_mod(&f, w.prime).unwrap(), &w.degrees);
            prop_assert_eq!(w.degrees.total(), n);
            common.intersect(&sumset(w.degrees.degrees()));
            prop_assert!(common.survivors().len() <= last);
            last = common.survivors().len();
        }
        prop_assert_eq!(v.answer == GaloisAnswer::Irreducible, common.is_empty());
    }
}

#[test]
fn phi5_patterns_are_frobenius_classes() {
    let f = IntPolynomial::from_i64(&[1, 1, 1, 1, 1]);
    let allowed = [vec![1, 1, 1, 1], vec![2, 2], vec![4]];
    for q in (2..3000u64).filter(|&q| is_prime_u64(q) && q != 5) {
        let d = factor_degrees_mod(&f, q).unwrap();
        assert!(allowed.iter().any(|a| a[..] == *d.degrees()), "q = {q}: {d}");
    }
}

#[test]
fn pattern_predicates_agree_with_definitions() {
    let cases: Vec<Vec<usize>> = vec![vec![2], vec![1, 2], vec![2, 2], vec![2, 3, 3], vec![2, 4], vec![7, 6], vec![13]];
    for c in cases {
        let d = DegreeMultiset::new(c.clone());
        let twos = c.iter().filter(|&&x| x == 2).count();
        let odd_rest = c.iter().filter(|&&x| x != 2).all(|x| x % 2 == 1);
        assert_eq!(has_transposition_pattern(&d), twos == 1 && odd_rest);
        let n: usize = c.iter().sum();
        let long = c.iter().any(|&l| is_prime_trial(l as u64) && 2 * l > n && l + 5 < n);
        assert_eq!(has_long_prime_cycle(&d, n, 5), long);
    }
}

#[test]
fn same_seed_same_verdict() {
    let f = IntPolynomial::from_i64(&[-1, -1, 0, 0, 0, 1]);
    let cfg = GaloisConfig::default();
    let a = is_sn(&f, 1e-6, StreamSeed::new(99), &cfg).unwrap();
    let b = is_sn(&f, 1e-6, StreamSeed::new(99), &cfg).unwrap();
    assert_eq!(a, b);
}
