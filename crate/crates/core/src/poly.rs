//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored constant term first. The representation is
//! canonical: the coefficient vector is empty for the zero polynomial and
//! otherwise ends in a nonzero leading coefficient.

use crate::error::{Error, Result};
use crate::json::SafeInts;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from constant-first coefficients, trimming
    /// trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(x - r1)(x - r2)...`
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| {
            &acc * &Self::from_i64(&[-r, 1])
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Degree of a monic polynomial of positive degree, or the matching error.
    pub(crate) fn monic_degree(&self) -> Result<usize> {
        match self.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(_) if !self.is_monic() => Err(Error::NotMonic),
            Some(n) => Ok(n),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn exact_div_scalar(&self, d: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c / d).collect())
    }

    fn shift_mul(&self, c: &BigInt, shift: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self::new(coeffs)
    }

    /// Division by a monic polynomial over the integers: `(quotient, remainder)`.
    ///
    /// # Panics
    /// If `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `divisor` (monic) divides `self` exactly.
    pub fn exact_div_monic(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = b*q + r`.
    pub fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &b.shift_mul(&lr, dr - db);
            steps += 1;
        }
        let missing = (da - db + 1) as u32 - steps;
        if missing > 0 {
            r = r.scale(&num_traits::pow(lb, missing as usize));
        }
        r
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SafeInts(&self.coeffs).serialize(s)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Sum of the absolute values of the coefficients.
pub fn l1_norm(f: &IntPolynomial) -> BigInt {
    f.coeffs.iter().map(|c| c.abs()).sum()
}

/// Resultant of `a` and `b` by the subresultant polynomial remainder
/// sequence. Intermediate divisions are exact, so coefficient growth stays
/// polynomial in the input size.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if da == 0 {
        return num_traits::pow(a.coeffs[0].clone(), db);
    }
    if db == 0 {
        return num_traits::pow(b.coeffs[0].clone(), da);
    }

    let ca = a.content();
    let cb = b.content();
    let mut a = a.exact_div_scalar(&ca);
    let mut b = b.exact_div_scalar(&cb);
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut negate = false;

    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            negate = true;
        }
    }

    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.exact_div_scalar(&divisor);
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
        };
        da = db;
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => break,
            Some(d) => db = d,
        }
    }

    let lb = b.coeffs[0].clone();
    let h = if da == 1 {
        lb
    } else {
        num_traits::pow(lb, da) / num_traits::pow(h, da - 1)
    };
    let res = t * h;
    if negate {
        -res
    } else {
        res
    }
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant(f, &f.derivative()) / f.leading().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
}

/// Upper bound `n^n |f|_1^(2n-2)` on the absolute discriminant of a monic
/// polynomial of degree `n`.
pub fn mahler_bound(f: &IntPolynomial) -> Result<BigInt> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    Ok(num_traits::pow(BigInt::from(n), n) * num_traits::pow(l1_norm(f), 2 * n - 2))
}

/// True iff the coefficient sequence is a palindrome.
pub fn is_reciprocal(f: &IntPolynomial) -> bool {
    let c = &f.coeffs;
    c.iter().eq(c.iter().rev())
}

/// The degree-`n` polynomial `F` with `x^n F(x + 1/x) = f(x)` for a monic
/// reciprocal `f` of degree `2n`.
pub fn trace_polynomial(f: &IntPolynomial) -> Result<IntPolynomial> {
    let deg = f.monic_degree()?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    if !is_reciprocal(f) {
        return Err(Error::NotReciprocal);
    }
    let n = deg / 2;
    // x^k + x^-k as a polynomial in z = x + 1/x: E_0 = 2, E_1 = z,
    // E_{k+1} = z E_k - E_{k-1}.
    let z = IntPolynomial::x();
    let mut prev = IntPolynomial::from_i64(&[2]);
    let mut cur = z.clone();
    let mut out = IntPolynomial::new(vec![f.coeffs[n].clone()]);
    for k in 1..=n {
        out = &out + &cur.scale(&f.coeffs[n - k]);
        let next = &(&z * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(out)
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Memoized cyclotomic polynomials.
#[derive(Debug, Default)]
pub struct CyclotomicTable {
    cache: HashMap<u64, IntPolynomial>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e`.
    pub fn get(&mut self, d: u64) -> &IntPolynomial {
        assert!(d >= 1, "cyclotomic index must be positive");
        if !self.cache.contains_key(&d) {
            let mut acc = IntPolynomial::monomial(BigInt::one(), d as usize);
            acc = &acc - &IntPolynomial::one();
            for e in (1..d).filter(|e| d % e == 0) {
                let phi_e = self.get(e).clone();
                acc = acc
                    .exact_div_monic(&phi_e)
                    .expect("cyclotomic factor divides x^d - 1");
            }
            self.cache.insert(d, acc);
        }
        &self.cache[&d]
    }
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    CyclotomicTable::new().get(d).clone()
}

/// True iff the monic `f` is a product (with multiplicity) of cyclotomic
/// polynomials, decided by exhaustive trial division.
pub fn is_cyclotomic_product(f: &IntPolynomial) -> Result<bool> {
    let n = f.monic_degree()?;
    // Roots of unity have norm one, so the constant term must be +-1.
    if !f.coeffs[0].abs().is_one() {
        return Ok(false);
    }
    let mut table = CyclotomicTable::new();
    let mut rest = f.clone();
    // phi(d) >= sqrt(d/2), so every Phi_d of degree <= n has d <= 2n^2.
    let bound = 2 * (n as u64) * (n as u64);
    for d in 1..=bound.max(2) {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if remaining == 0 {
            break;
        }
        if euler_phi(d) > remaining {
            continue;
        }
        let phi = table.get(d);
        while let Some(q) = rest.exact_div_monic(phi) {
            rest = q;
        }
    }
    Ok(rest.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -1, 0, 1]).to_string(), "x^3 - x - 1");
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3x + 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2x");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn l1_norm_examples() {
        assert_eq!(l1_norm(&p(&[1, -3, 1])), BigInt::from(5));
        assert_eq!(l1_norm(&p(&[])), BigInt::from(0));
        assert_eq!(l1_norm(&p(&[1, 1, 1, 1, 1])), BigInt::from(5));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, 3, 1])).unwrap(), BigInt::from(5));
        assert_eq!(discriminant(&p(&[-1, -1, 0, 1])).unwrap(), BigInt::from(-23));
        assert_eq!(discriminant(&p(&[1, -2, 1])).unwrap(), BigInt::from(0));
        assert_eq!(discriminant(&p(&[5])), Err(Error::ConstantPolynomial));
        assert_eq!(discriminant(&p(&[3, 1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn discriminant_of_quartic_and_quintic() {
        // Phi_5: 5^3 = 125; x^4 + 1: 256; x^5 - x - 1: 2869.
        assert_eq!(discriminant(&p(&[1, 1, 1, 1, 1])).unwrap(), BigInt::from(125));
        assert_eq!(discriminant(&p(&[1, 0, 0, 0, 1])).unwrap(), BigInt::from(256));
        assert_eq!(discriminant(&p(&[-1, -1, 0, 0, 0, 1])).unwrap(), BigInt::from(2869));
    }

    #[test]
    fn resultant_handles_common_roots_and_constants() {
        let a = IntPolynomial::from_roots(&[1, 2, 3]);
        let b = IntPolynomial::from_roots(&[3, 5]);
        assert_eq!(resultant(&a, &b), BigInt::from(0));
        assert_eq!(resultant(&p(&[3]), &a), BigInt::from(27));
        // Res(x - 2, x - 5) = 2 - 5
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-5, 1])), BigInt::from(-3));
    }

    #[test]
    fn mahler_examples() {
        assert_eq!(mahler_bound(&p(&[1, 0, 1])).unwrap(), BigInt::from(16));
        assert_eq!(mahler_bound(&p(&[1, -3, 1])).unwrap(), BigInt::from(100));
        assert_eq!(mahler_bound(&p(&[0, 1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn reciprocal_examples() {
        assert!(is_reciprocal(&p(&[1, 1, 1, 1, 1])));
        assert!(!is_reciprocal(&p(&[3, 2, 1])));
        assert!(is_reciprocal(&p(&[1, 0, 0, 0, 1])));
    }

    #[test]
    fn trace_polynomial_examples() {
        assert_eq!(trace_polynomial(&p(&[1, 0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(trace_polynomial(&p(&[1, 0, 0, 0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(trace_polynomial(&p(&[1, 1, 1, 1, 1])).unwrap(), p(&[-1, 1, 1]));
        assert_eq!(trace_polynomial(&p(&[1, 3, 1, 3, 1])).unwrap(), p(&[-1, 3, 1]));
    }

    #[test]
    fn trace_polynomial_errors() {
        assert_eq!(trace_polynomial(&p(&[1, 2, 3, 1])), Err(Error::OddDegree(3)));
        assert_eq!(trace_polynomial(&p(&[3, 2, 1])), Err(Error::NotReciprocal));
        assert_eq!(trace_polynomial(&p(&[2, 0, 2])), Err(Error::NotMonic));
        assert_eq!(trace_polynomial(&p(&[1, 1, 1, 1])), Err(Error::OddDegree(3)));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic(105).coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn euler_phi_small() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
    }

    #[test]
    fn cyclotomic_product_examples() {
        assert!(is_cyclotomic_product(&p(&[-1, 0, 1])).unwrap());
        assert!(!is_cyclotomic_product(&p(&[-1, -1, 1])).unwrap());
        assert!(is_cyclotomic_product(&IntPolynomial::from_roots(&[1, 1, 1])).unwrap());
        assert!(!is_cyclotomic_product(&p(&[-1, -1, 0, 1])).unwrap());
        assert!(!is_cyclotomic_product(&p(&[0, 1])).unwrap());
        assert_eq!(is_cyclotomic_product(&p(&[1, 2])), Err(Error::NotMonic));
        assert_eq!(is_cyclotomic_product(&p(&[1])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn division_and_pseudo_remainder() {
        let f = p(&[-1, 0, 0, 1]);
        let (q, r) = f.div_rem_monic(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        // 2^2 (x^2 + 1) = (2x + 1)(2x - 1) + 5
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[1, 2])), p(&[5]));
    }
}
