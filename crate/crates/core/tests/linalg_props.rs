use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use zariski_core::linalg::{adjugate_inverse, characteristic_polynomial, multiply, random_word, validate, GroupKind};
use zariski_core::poly::is_reciprocal;
use zariski_core::{IntegerMatrix, StreamSeed};
use zariski_oracle::{big, cofactor_charpoly};

fn square(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim).prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(-bound..=bound, n), n))
}

fn to_matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows.to_vec()).unwrap()
}

fn sp4_generators() -> Vec<IntegerMatrix> {
    // J and the shears [[I, S], [0, I]] for S in {E11, E12 + E21, E22}.
    let j = vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, 0, 0, 0], vec![0, -1, 0, 0]];
    let shear = |s: [[i64; 2]; 2]| {
        let mut m = vec![vec![0i64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in 0..2 {
            for b in 0..2 {
                m[a][2 + b] = s[a][b];
            }
        }
        m
    };
    [j, shear([[1, 0], [0, 0]]), shear([[0, 1], [1, 0]]), shear([[0, 0], [0, 1]])]
        .iter()
        .map(|r| to_matrix(r))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn charpoly_matches_cofactor_expansion(rows in square(5, 9)) {
        let a = to_matrix(&rows);
        let oracle = cofactor_charpoly(&rows.iter().map(|r| big(r)).collect::<Vec<_>>());
        let got = characteristic_polynomial(&a);
        prop_assert_eq!(got.coeffs(), &oracle[..]);
    }

    #[test]
    fn determinant_matches_charpoly_constant(rows in square(4, 5)) {
        let a = to_matrix(&rows);
        let n = rows.len();
        let c0 = characteristic_polynomial(&a).coeff(0);
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(a.determinant(), sign * c0);
    }

    #[test]
    fn symplectic_words_have_reciprocal_charpolys(seed in any::<u64>(), len in 1usize..40) {
        let gs = validate(GroupKind::Symplectic, 4, sp4_generators()).unwrap();
        let w = random_word(&gs, len, &mut StreamSeed::new(seed).rng());
        prop_assert!(is_reciprocal(&characteristic_polynomial(&w)));
    }

    #[test]
    fn words_have_unit_determinant_and_bounded_entries(seed in any::<u64>(), len in 1usize..30) {
        let gs = validate(GroupKind::Symplectic, 4, sp4_generators()).unwrap();
        let w = random_word(&gs, len, &mut StreamSeed::new(seed).rng());
        prop_assert!(w.determinant().is_one());
        let bound = BigInt::from(gs.dim()).pow(len as u32) * gs.norm_bound().pow(len as u32);
        prop_assert!(w.max_abs_entry() <= bound);
    }

    #[test]
    fn adjugate_inverse_is_two_sided(seed in any::<u64>(), len in 1usize..20) {
        let gs = validate(GroupKind::Symplectic, 4, sp4_generators()).unwrap();
        let w = random_word(&gs, len, &mut StreamSeed::new(seed).rng());
        let inv = adjugate_inverse(&w).unwrap();
        prop_assert!(multiply(&w, &inv).unwrap().is_identity());
        prop_assert!(multiply(&inv, &w).unwrap().is_identity());
    }
}
