use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator set is empty")]
    NoGenerators,
    #[error("generator {index}: {source}")]
    Generator { index: usize, source: Box<Error> },
    #[error("determinant is {0}, expected 1")]
    DeterminantNotOne(BigInt),
    #[error("matrix does not preserve the standard symplectic form")]
    NotSymplectic,
    #[error("symplectic group needs an even dimension of at least 2, got {0}")]
    BadSymplecticDimension(usize),
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("reciprocal polynomial must have even degree, got {0}")]
    OddDegree(usize),
    #[error("polynomial has repeated roots (discriminant is zero)")]
    ZeroDiscriminant,
    #[error("primality is only defined for integers >= 2, got {0}")]
    PrimalityDomain(BigInt),
    #[error("invalid prime interval [{lo}, {hi})")]
    InvalidInterval { lo: u64, hi: u64 },
    #[error("no prime in [{lo}, {hi}) avoiding the discriminant after {attempts} attempts")]
    PrimesExhausted { lo: u64, hi: u64, attempts: u64 },
    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefreeMod(u64),
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(f64),
    #[error("word constant must be positive and finite, got {0}")]
    InvalidWordConstant(f64),
    #[error("word length must be positive")]
    ZeroWordLength,
}

impl Error {
    pub(crate) fn at_generator(self, index: usize) -> Error {
        Error::Generator {
            index,
            source: Box::new(self),
        }
    }
}

pub(crate) fn check_epsilon(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon(eps))
    }
}
