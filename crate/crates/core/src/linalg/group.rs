use super::{adjugate_inverse, IntegerMatrix};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use std::fmt;

/// The ambient group a generator set is declared to live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupKind {
    #[serde(rename = "SL")]
    SpecialLinear,
    #[serde(rename = "Sp")]
    Symplectic,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::SpecialLinear => "SL",
            GroupKind::Symplectic => "Sp",
        })
    }
}

/// Validated generators of a subgroup of `SL(dim, Z)` or `Sp(dim, Z)`, with
/// their inverses precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    kind: GroupKind,
    dim: usize,
    generators: Vec<IntegerMatrix>,
    inverses: Vec<IntegerMatrix>,
    norm_bound: BigInt,
}

impl GeneratorSet {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntegerMatrix] {
        &self.generators
    }

    pub fn inverses(&self) -> &[IntegerMatrix] {
        &self.inverses
    }

    /// Maximum over the generators of the ceiling of the Frobenius norm.
    pub fn norm_bound(&self) -> &BigInt {
        &self.norm_bound
    }

    /// The `i`-th element of the symmetric generating set: generators first,
    /// then their inverses in the same order.
    pub fn symmetric(&self, i: usize) -> &IntegerMatrix {
        let k = self.generators.len();
        if i < k {
            &self.generators[i]
        } else {
            &self.inverses[i - k]
        }
    }

    pub fn symmetric_len(&self) -> usize {
        2 * self.generators.len()
    }
}

/// The standard symplectic form `[[0, I], [-I, 0]]` of even size `dim`.
pub fn symplectic_form(dim: usize) -> IntegerMatrix {
    let n = dim / 2;
    IntegerMatrix::from_fn(dim, |i, j| {
        if i < n && j == i + n {
            BigInt::one()
        } else if i >= n && j + n == i {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Checks the group invariants and builds a [`GeneratorSet`].
pub fn validate(kind: GroupKind, dim: usize, generators: Vec<IntegerMatrix>) -> Result<GeneratorSet> {
    if kind == GroupKind::Symplectic && (dim < 2 || dim % 2 == 1) {
        return Err(Error::BadSymplecticDimension(dim));
    }
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    let form = (kind == GroupKind::Symplectic).then(|| symplectic_form(dim));
    let mut inverses = Vec::with_capacity(generators.len());
    for (index, g) in generators.iter().enumerate() {
        let at = |e: Error| e.at_generator(index);
        if g.dim() != dim {
            return Err(at(Error::DimensionMismatch {
                left: g.dim(),
                right: dim,
            }));
        }
        inverses.push(adjugate_inverse(g).map_err(at)?);
        if let Some(j) = &form {
            if &g.transpose().product(j).product(g) != j {
                return Err(at(Error::NotSymplectic));
            }
        }
    }
    let norm_bound = generators
        .iter()
        .map(IntegerMatrix::frobenius_norm_ceil)
        .max()
        .unwrap_or_default();
    Ok(GeneratorSet {
        kind,
        dim,
        generators,
        inverses,
        norm_bound,
    })
}

/// Like [`validate`], starting from raw rows so that malformed (non-square)
/// generators are reported with their index.
pub fn validate_rows(kind: GroupKind, dim: usize, generators: Vec<Vec<Vec<BigInt>>>) -> Result<GeneratorSet> {
    let mats = generators
        .into_iter()
        .enumerate()
        .map(|(i, rows)| IntegerMatrix::from_rows(rows).map_err(|e| e.at_generator(i)))
        .collect::<Result<Vec<_>>>()?;
    validate(kind, dim, mats)
}

/// Product of `length` factors drawn uniformly and independently from the
/// symmetric generating set.
///
/// # Panics
/// If `length` is zero.
pub fn random_word<R: Rng + ?Sized>(gs: &GeneratorSet, length: usize, rng: &mut R) -> IntegerMatrix {
    assert!(length >= 1, "word length must be positive");
    let letters = gs.symmetric_len();
    let mut word = gs.symmetric(rng.random_range(0..letters)).clone();
    for _ in 1..length {
        word = word.product(gs.symmetric(rng.random_range(0..letters)));
    }
    word
}
