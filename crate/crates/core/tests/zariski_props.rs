use num_traits::One;
use proptest::prelude::*;
use zariski_core::linalg::{adjugate_inverse, multiply, random_word, validate, GroupKind};
use zariski_core::zariski::{adjoint_matrices, is_irreducible_algebra, AdjointBasis};
use zariski_core::{general_zariski_dense, zariski_dense, DensityConfig, GeneratorSet, IntegerMatrix, StreamSeed};
use zariski_oracle::word_span_dimension;

fn m(rows: &[&[i64]]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap()
}

fn sl3() -> GeneratorSet {
    let a = m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let b = m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let c = m(&[&[1, 0, 0], &[2, 1, 0], &[0, 0, 1]]);
    validate(GroupKind::SpecialLinear, 3, vec![a, b, c]).unwrap()
}

fn sp4() -> GeneratorSet {
    let j = m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
    let e11 = m(&[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let e12 = m(&[&[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let e22 = m(&[&[1, 0, 0, 0], &[0, 1, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    validate(GroupKind::Symplectic, 4, vec![j, e11, e12, e22]).unwrap()
}

fn generator_set(max_dim: usize) -> impl Strategy<Value = (usize, Vec<Vec<Vec<i64>>>)> {
    (2..=max_dim).prop_flat_map(|n| {
        let mat = prop::collection::vec(prop::collection::vec(-2i64..=2, n), n);
        (Just(n), prop::collection::vec(mat, 1..=3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn adjoint_is_multiplicative(seed in any::<u64>(), la in 1usize..12, lb in 1usize..12, sym in any::<bool>()) {
        let gs = if sym { sp4() } else { sl3() };
        let basis = AdjointBasis::new(gs.kind(), gs.dim()).unwrap();
        let mut rng = StreamSeed::new(seed).rng();
        let g = random_word(&gs, la, &mut rng);
        let h = random_word(&gs, lb, &mut rng);
        let gh = multiply(&g, &h).unwrap();
        let lhs = basis.adjoint(&gh).unwrap();
        let rhs = multiply(&basis.adjoint(&g).unwrap(), &basis.adjoint(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = basis.adjoint(&adjugate_inverse(&g).unwrap()).unwrap();
        prop_assert!(multiply(&basis.adjoint(&g).unwrap(), &inv).unwrap().is_identity());
    }

    #[test]
    fn burnside_matches_word_span((dim, gens) in generator_set(3)) {
        let mats: Vec<IntegerMatrix> = gens.iter().map(|g| IntegerMatrix::from_rows(g.clone()).unwrap()).collect();
        let span = is_irreducible_algebra(&mats, dim).unwrap();
        let oracle = word_span_dimension(&gens, dim);
        prop_assert_eq!(span.dimension, oracle);
        prop_assert_eq!(span.irreducible, oracle == dim * dim);
    }
}

#[test]
fn adjoint_generators_have_unit_determinant() {
    for gs in [sl3(), sp4()] {
        for a in adjoint_matrices(&gs) {
            assert!(a.determinant().is_one());
        }
    }
}

#[test]
fn density_verdicts_are_seed_deterministic() {
    let cfg = DensityConfig {
        word_length: Some(30),
        ..DensityConfig::default()
    };
    for gs in [sl3(), sp4()] {
        for seed in 0..3 {
            let a = zariski_dense(&gs, 1e-6, StreamSeed::new(seed), &cfg).unwrap();
            let b = zariski_dense(&gs, 1e-6, StreamSeed::new(seed), &cfg).unwrap();
            assert_eq!(a, b);
            let a = general_zariski_dense(&gs, 1e-6, StreamSeed::new(seed), &cfg).unwrap();
            let b = general_zariski_dense(&gs, 1e-6, StreamSeed::new(seed), &cfg).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn dense_answers_are_certain() {
    let cfg = DensityConfig::default();
    for seed in 0..4 {
        let v = general_zariski_dense(&sl3(), 1e-6, StreamSeed::new(seed), &cfg).unwrap();
        assert_eq!(v.dense, v.certainty == zariski_core::Certainty::Certain);
    }
}
