//! Probabilistic decision of Zariski density for finitely generated
//! subgroups of `SL(n, Z)` and `Sp(2n, Z)`.
//!
//! The pipeline samples random words in the generators, computes their
//! characteristic polynomials exactly, and certifies that those polynomials
//! have the generic Galois group by factoring them modulo random primes.
//! Positive answers carry a certificate; negative answers hold with
//! probability at least `1 - eps`.

pub mod error;
pub mod exec;
pub mod finite_field;
pub mod galois;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod seed;
pub mod zariski;

pub use error::{Error, Result};
pub use exec::Execution;
pub use finite_field::{factor_degrees_mod, is_prime, random_prime_avoiding, DegreeMultiset, PrimeInterval};
pub use galois::{is_hyperoctahedral, is_sn, is_transitive, GaloisAnswer, GaloisConfig, GaloisVerdict};
pub use linalg::{characteristic_polynomial, validate, GeneratorSet, GroupKind, IntegerMatrix};
pub use poly::IntPolynomial;
pub use seed::StreamSeed;
pub use zariski::{general_zariski_dense, zariski_dense, Certainty, DensityConfig, DensityVerdict};
