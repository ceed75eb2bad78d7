//! Primality, random primes, and factorization patterns modulo primes.

use crate::error::{Error, Result};
use crate::linalg::rank::{inv_mod, mul_mod, pow_mod, reduce_mod};
use crate::poly::IntPolynomial;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are a
/// complete base set for all n < 3.3 * 10^24, which covers u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rounds of Miller-Rabin above 2^64; error at most 4^-64 per call.
const BIG_ROUNDS: usize = 64;

/// Primality of `r >= 2`: exact below 2^64, Miller-Rabin with
/// pseudo-randomly chosen bases (seeded from `r`) above.
pub fn is_prime(r: &BigInt) -> Result<bool> {
    if r < &BigInt::from(2) {
        return Err(Error::PrimalityDomain(r.clone()));
    }
    if let Some(small) = r.to_u64() {
        return Ok(is_prime_u64(small));
    }
    let n = r.magnitude();
    if SMALL_PRIMES.iter().any(|&p| (n % p).is_zero()) {
        return Ok(false);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(n.iter_u64_digits().next().unwrap_or(0));
    let bases = SMALL_PRIMES
        .iter()
        .map(|&a| BigUint::from(a))
        .chain((0..BIG_ROUNDS).map(|_| BigUint::from(rng.random::<u64>()) % &n_minus_1 + 1u32));
    'witness: for a in bases {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Half-open interval `[lo, hi)` from which sampling primes are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeInterval {
    lo: u64,
    hi: u64,
}

impl PrimeInterval {
    /// Largest supported upper end; keeps residues below 2^63.
    pub const MAX_HI: u64 = 1 << 63;

    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo < 2 || lo >= hi || hi > Self::MAX_HI {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(PrimeInterval { lo, hi })
    }

    /// `[2^low_bits, 2^high_bits)`.
    pub fn from_bits(low_bits: u32, high_bits: u32) -> Result<Self> {
        let pow = |b: u32| 1u64.checked_shl(b).filter(|_| b < 64).unwrap_or(u64::MAX);
        Self::new(pow(low_bits), pow(high_bits))
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Rejection cap: 64 attempts per bit of interval width.
    pub fn max_attempts(&self) -> u64 {
        64 * u64::from(64 - (self.hi - self.lo).leading_zeros())
    }
}

impl Default for PrimeInterval {
    fn default() -> Self {
        PrimeInterval {
            lo: 1 << 20,
            hi: 1 << 21,
        }
    }
}

/// A prime drawn uniformly from `interval` among those not dividing `disc`.
pub fn random_prime_avoiding<R: Rng + ?Sized>(
    disc: &BigInt,
    interval: PrimeInterval,
    rng: &mut R,
) -> Result<u64> {
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let attempts = interval.max_attempts();
    for _ in 0..attempts {
        let q = rng.random_range(interval.lo..interval.hi);
        if is_prime_u64(q) && reduce_mod(disc, q) != 0 {
            return Ok(q);
        }
    }
    Err(Error::PrimesExhausted {
        lo: interval.lo,
        hi: interval.hi,
        attempts,
    })
}

/// Multiset of irreducible-factor degrees, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeMultiset(Vec<usize>);

impl DegreeMultiset {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeMultiset(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the degrees, i.e. the degree of the factored polynomial.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, d: usize) -> usize {
        self.0.iter().filter(|&&x| x == d).count()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<usize>> for DegreeMultiset {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}

/// Degrees of the irreducible factors of `f` modulo the prime `q`, by
/// distinct-degree factorization.
///
/// The caller must ensure `q` divides neither the discriminant nor the
/// leading coefficient; violations are reported as errors.
pub fn factor_degrees_mod(f: &IntPolynomial, q: u64) -> Result<DegreeMultiset> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = reduce_mod(f.leading().unwrap(), q);
    if lead == 0 {
        return Err(Error::LeadingCoefficientVanishes(q));
    }
    let field = Fp::new(q);
    let inv = inv_mod(lead, q);
    let mut g: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| mul_mod(reduce_mod(c, q), inv, q))
        .collect();
    if field.gcd(g.clone(), field.derivative(&g)).len() > 1 {
        return Err(Error::NotSquarefreeMod(q));
    }

    let x = vec![0, 1];
    let mut h = field.rem(x.clone(), &g);
    let mut degrees = Vec::new();
    let mut d = 1;
    while deg(&g) >= 2 * d {
        // h = x^(q^d) mod g
        h = field.pow_mod_poly(&h, q, &g);
        let part = field.gcd(g.clone(), field.sub(&h, &x));
        let part_deg = deg(&part);
        if part_deg > 0 {
            degrees.extend(std::iter::repeat(d).take(part_deg / d));
            g = field.div_exact(&g, &part);
            h = field.rem(h, &g);
        }
        d += 1;
    }
    if deg(&g) > 0 {
        degrees.push(deg(&g));
    }
    Ok(DegreeMultiset::new(degrees))
}

fn deg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Dense polynomial arithmetic over `F_p`, constant term first, trimmed.
struct Fp {
    p: u64,
}

impl Fp {
    fn new(p: u64) -> Self {
        Fp { p }
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + self.p - y) % self.p
                })
                .collect(),
        )
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p = self.p;
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        trim(out)
    }

    /// Remainder modulo a monic `m`.
    fn rem(&self, mut a: Vec<u64>, m: &[u64]) -> Vec<u64> {
        let dm = deg(m);
        debug_assert_eq!(m.last(), Some(&1));
        let p = self.p;
        while a.len() > dm {
            let k = a.len() - 1;
            let c = a[k];
            if c != 0 {
                for (j, &mj) in m[..dm].iter().enumerate() {
                    let idx = k - dm + j;
                    a[idx] = (a[idx] + p - mul_mod(c, mj, p)) % p;
                }
            }
            a.pop();
        }
        trim(a)
    }

    fn div_exact(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let db = deg(b);
        let inv = inv_mod(*b.last().unwrap(), p);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + db], inv, p);
            quot[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - mul_mod(c, bj, p)) % p;
                }
            }
        }
        debug_assert!(rem.iter().all(|&x| x == 0), "inexact division");
        trim(quot)
    }

    fn make_monic(&self, a: Vec<u64>) -> Vec<u64> {
        match a.last() {
            None | Some(1) => a,
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                a.into_iter().map(|x| mul_mod(x, inv, self.p)).collect()
            }
        }
    }

    /// Monic gcd.
    fn gcd(&self, a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
        let (mut a, mut b) = (self.make_monic(trim(a)), self.make_monic(trim(b)));
        while !b.is_empty() {
            let r = self.make_monic(self.rem(a, &b));
            a = b;
            b = r;
        }
        a
    }

    fn derivative(&self, a: &[u64]) -> Vec<u64> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `base^exp mod m` by square-and-multiply.
    fn pow_mod_poly(&self, base: &[u64], mut exp: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = base.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(self.mul(&acc, &b), m);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.rem(self.mul(&b, &b), m);
            }
        }
        self.rem(acc, m)
    }
}
