//! Exact integer matrix arithmetic.

mod group;
pub mod rank;

pub use group::{random_word, symplectic_form, validate, validate_rows, GeneratorSet, GroupKind};

use crate::error::{Error, Result};
use crate::json::SafeInt;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;

/// Square matrix with arbitrary-precision integer entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    /// # Panics
    /// If `dim` is zero.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| BigInt::from((i == j) as u8))
    }

    /// # Panics
    /// If `dim` is zero.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        IntegerMatrix { dim, entries }
    }

    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                dim,
            });
        }
        Ok(IntegerMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Companion matrix of a monic polynomial (ones on the subdiagonal,
    /// negated coefficients in the last column).
    pub fn companion(f: &IntPolynomial) -> Result<Self> {
        let n = f.monic_degree()?;
        Ok(Self::from_fn(n, |i, j| {
            if j == n - 1 {
                -f.coeff(i)
            } else if i == j + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, e)| *e == BigInt::from((k / self.dim == k % self.dim) as u8))
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }

    /// Ceiling of the Frobenius norm.
    pub fn frobenius_norm_ceil(&self) -> BigInt {
        let sq: BigInt = self.entries.iter().map(|e| e * e).sum();
        let root = sq.sqrt();
        if &root * &root == sq {
            root
        } else {
            root + 1
        }
    }

    pub fn determinant(&self) -> BigInt {
        let p = characteristic_polynomial(self);
        let c0 = p.coeff(0);
        if self.dim % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntegerMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    fn add_scaled_identity(&mut self, c: &BigInt) {
        for i in 0..self.dim {
            self.entries[i * self.dim + i] += c;
        }
    }

    /// Exact product; callers must have checked the dimensions.
    pub(crate) fn product(&self, other: &IntegerMatrix) -> IntegerMatrix {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            let dst = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (d, b) in dst.iter_mut().zip(other.row(k)) {
                    if !b.is_zero() {
                        *d += a * b;
                    }
                }
            }
        }
        IntegerMatrix {
            dim: n,
            entries: out,
        }
    }

    fn check_same_dim(&self, other: &IntegerMatrix) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.dim))?;
        for row in self.rows() {
            let cells: Vec<SafeInt<'_>> = row.iter().map(SafeInt).collect();
            seq.serialize_element(&cells)?;
        }
        seq.end()
    }
}

pub fn multiply(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<IntegerMatrix> {
    a.check_same_dim(b)?;
    Ok(a.product(b))
}

pub fn commutes(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<bool> {
    a.check_same_dim(b)?;
    Ok(a.product(b) == b.product(a))
}

/// Characteristic polynomial `det(xI - A)` by Berkowitz's division-free
/// algorithm.
///
/// Works through the leading principal submatrices: with
/// `A_{r+1} = [[A_r, S], [R, a]]`, the coefficient vector of the next
/// characteristic polynomial is a lower-triangular Toeplitz matrix with first
/// column `(1, -a, -R S, -R A_r S, -R A_r^2 S, ...)` applied to the current
/// one. Only ring operations are used.
pub fn characteristic_polynomial(a: &IntegerMatrix) -> IntPolynomial {
    let n = a.dim;
    // Highest-degree-first.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a.get(r, r));
        let mut v: Vec<BigInt> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for k in 0..r {
            let rv: BigInt = (0..r).map(|j| a.get(r, j) * &v[j]).sum();
            toeplitz.push(-rv);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).map(|j| a.get(i, j) * &v[j]).sum())
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .map(|j| &toeplitz[i - j] * &coeffs[j])
                    .sum()
            })
            .collect();
        coeffs = next;
    }
    coeffs.reverse();
    IntPolynomial::new(coeffs)
}

/// Adjugate of a determinant-one matrix, which is its exact integer inverse.
///
/// Uses Cayley-Hamilton: with `det(xI - A) = x^n + p_{n-1} x^{n-1} + ... + p_0`,
/// `adj(A) = (-1)^(n-1) (A^{n-1} + p_{n-1} A^{n-2} + ... + p_1 I)`.
pub fn adjugate_inverse(a: &IntegerMatrix) -> Result<IntegerMatrix> {
    let n = a.dim;
    let p = characteristic_polynomial(a);
    let det = if n % 2 == 0 { p.coeff(0) } else { -p.coeff(0) };
    if !det.is_one() {
        return Err(Error::DeterminantNotOne(det));
    }
    let mut m = IntegerMatrix::identity(n);
    for k in (1..n).rev() {
        m = a.product(&m);
        m.add_scaled_identity(&p.coeff(k));
    }
    if n % 2 == 0 {
        m = m.scale(&BigInt::from(-1));
    }
    Ok(m)
}
