//! Rank computations: an incremental echelon basis modulo a word-sized
//! prime, and exact fraction-free elimination over the integers.
//!
//! Reduction modulo a prime can only lower rank, so vectors that are
//! independent modulo `p` are independent over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// The Mersenne prime 2^61 - 1.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo the prime `p` (Fermat).
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Row echelon basis over `F_p`, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct ModularEchelon {
    p: u64,
    len: usize,
    // Each row is normalized to 1 at its pivot and vanishes at the pivots of
    // all earlier rows.
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModularEchelon {
    pub fn new(len: usize, p: u64) -> Self {
        ModularEchelon {
            p,
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces `v` against the basis; returns the residue.
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if *r != 0 {
                    *x = (*x + p - mul_mod(c, *r, p)) % p;
                }
            }
        }
        v
    }

    /// True if `v` is in the span of the current basis.
    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent of the basis; returns whether it was.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pivot], self.p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, self.p);
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn insert_integer(&mut self, v: &[BigInt]) -> bool {
        let reduced = v.iter().map(|x| reduce_mod(x, self.p)).collect();
        self.insert(reduced)
    }
}

/// Row echelon basis over the rationals, kept fraction-free: rows are
/// primitive integer vectors and elimination uses cross-multiplication.
#[derive(Clone, Debug)]
pub struct IntegerEchelon {
    len: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerEchelon {
    pub fn new(len: usize) -> Self {
        IntegerEchelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the basis over Q; returns whether it was.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = &row[*pivot];
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        self.rows.push((pivot, v));
        true
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Exact rank of an integer matrix given by rows, by Bareiss fraction-free
/// elimination. Every division performed is exact.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}
