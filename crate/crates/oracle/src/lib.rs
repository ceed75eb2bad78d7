//! Slow, direct reference implementations used to cross-check the library.
//!
//! Nothing here shares code with `zariski-core`. Polynomials are
//! constant-first coefficient vectors and matrices are lists of rows.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

pub type Poly = Vec<BigInt>;

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

/// Determinant of a matrix of polynomials by cofactor expansion along the
/// first row.
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Vec::new();
    for col in 0..n {
        if m[0][col].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let mut term = poly_mul(&m[0][col], &poly_det(&minor));
        if col % 2 == 1 {
            term.iter_mut().for_each(|c| *c = -&*c);
        }
        acc = poly_add(&acc, &term);
    }
    acc
}

/// `det(x I - A)` by cofactor expansion.
pub fn cofactor_charpoly(a: &[Vec<BigInt>]) -> Poly {
    let n = a.len();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -&a[i][j];
                    if i == j {
                        trim(vec![c, BigInt::one()])
                    } else {
                        trim(vec![c])
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&m)
}

/// A basis (in echelon form) of the row space.
fn reduced_basis(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let Some(ncols) = m.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let pivot_row: Vec<BigRational> = m[rank].iter().map(|x| x / &pivot).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    m.truncate(rank);
    m
}

fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Determinant over Q by elimination.
pub fn rational_det(a: &[Vec<BigInt>]) -> BigInt {
    let mut m = to_rational(a);
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            let pivot_row = m[col].clone();
            for (x, y) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * y;
            }
        }
    }
    det.to_integer()
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (a, b) = (trim(a.to_vec()), trim(b.to_vec()));
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m + n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // Highest coefficient first in each shifted row.
    for i in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    rational_det(&rows)
}

/// All complex roots by Aberth iteration.
pub fn complex_roots(f: &[f64]) -> Vec<Complex64> {
    let n = f.len() - 1;
    let lead = f[n];
    let c: Vec<f64> = f.iter().map(|x| x / lead).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &a in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::one() - ratio * s);
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Discriminant of a monic polynomial as the product of squared root
/// differences, in floating point.
pub fn root_product_discriminant(f: &[i64]) -> f64 {
    let coeffs: Vec<f64> = f.iter().map(|&x| x as f64).collect();
    let r = complex_roots(&coeffs);
    let mut d = Complex64::one();
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            d *= (r[i] - r[j]) * (r[i] - r[j]);
        }
    }
    d.re
}

/// Proper nonempty subset sums by enumerating every subset.
pub fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let n: usize = parts.iter().sum();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << parts.len()) {
        let s: usize = parts
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .sum();
        if s != 0 && s != n {
            out.insert(s);
        }
    }
    out
}

pub fn is_prime_trial(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn reduce_poly(f: &[i64], q: u64) -> Vec<u64> {
    let q = q as i64;
    let mut out: Vec<u64> = f.iter().map(|&c| c.rem_euclid(q) as u64).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Divides `g` by the monic `d` over `F_q`; returns the quotient if exact.
fn divide_exact(g: &[u64], d: &[u64], q: u64) -> Option<Vec<u64>> {
    let mut r = g.to_vec();
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return None;
    }
    let mut quot = vec![0u64; r.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = r[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &x) in d.iter().enumerate() {
                r[k + i] = (r[k + i] + q * q - c * x % q) % q;
            }
        }
    }
    r[..dd].iter().all(|&x| x == 0).then_some(quot)
}

/// Degrees of the irreducible factors of `f` modulo the prime `q` (small),
/// by trial division with every monic polynomial of increasing degree.
pub fn factor_degrees_brute(f: &[i64], q: u64) -> Vec<usize> {
    let mut g = reduce_poly(f, q);
    let lead = *g.last().expect("nonzero mod q");
    let inv = (1..q).find(|x| x * lead % q == 1).unwrap();
    g.iter_mut().for_each(|c| *c = *c * inv % q);
    let mut degrees = Vec::new();
    let mut d = 1;
    while g.len() > 2 * d {
        let count = q.pow(d as u32);
        for code in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push(c % q);
                c /= q;
            }
            cand.push(1);
            while let Some(quot) = divide_exact(&g, &cand, q) {
                degrees.push(d);
                g = quot;
            }
            if g.len() <= 2 * d {
                break;
            }
        }
        d += 1;
    }
    if g.len() > 1 {
        degrees.push(g.len() - 1);
    }
    degrees.sort_unstable();
    degrees
}

/// Squarefree test over `F_q` by checking every monic divisor of degree up
/// to half the degree for a repeated factor.
pub fn is_squarefree_brute(f: &[i64], q: u64) -> bool {
    let g = reduce_poly(f, q);
    let n = g.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..q.pow(d as u32) {
            let mut cand = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                cand.push(c % q);
                c /= q;
            }
            cand.push(1);
            let sq = {
                let mut out = vec![0u64; 2 * d + 1];
                for (i, a) in cand.iter().enumerate() {
                    for (j, b) in cand.iter().enumerate() {
                        out[i + j] = (out[i + j] + a * b) % q;
                    }
                }
                out
            };
            let lead = *g.last().unwrap();
            let inv = (1..q).find(|x| x * lead % q == 1).unwrap();
            let monic: Vec<u64> = g.iter().map(|c| c * inv % q).collect();
            if divide_exact(&monic, &sq, q).is_some() {
                return false;
            }
        }
    }
    true
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Dimension of the span of all words of length at most `2 dim^2` in the
/// generators (including the empty word).
pub fn word_span_dimension(gens: &[Vec<Vec<i64>>], dim: usize) -> usize {
    let gens: Vec<Vec<Vec<BigRational>>> = gens
        .iter()
        .map(|g| to_rational(&g.iter().map(|r| big(r)).collect::<Vec<_>>()))
        .collect();
    let identity: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect())
        .collect();
    let flatten = |m: &Vec<Vec<BigRational>>| m.iter().flatten().cloned().collect::<Vec<_>>();
    let unflatten = |v: &[BigRational]| v.chunks(dim).map(<[BigRational]>::to_vec).collect::<Vec<_>>();
    let mut basis = vec![flatten(&identity)];
    for _ in 0..2 * dim * dim {
        let mut rows = vec![flatten(&identity)];
        for b in &basis {
            let m = unflatten(b);
            for g in &gens {
                rows.push(flatten(&mat_mul(g, &m)));
            }
        }
        basis = reduced_basis(&rows);
    }
    basis.len()
}

/// `true` if the two integers agree to within `rel` relative error.
pub fn close(a: &BigInt, b: f64, rel: f64) -> bool {
    let a = a.to_f64().unwrap();
    (a - b).abs() <= rel * a.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrices() {
        let a = vec![big(&[2, 1]), big(&[1, 1])];
        assert_eq!(cofactor_charpoly(&a), big(&[1, -3, 1]));
        let b = vec![big(&[0, 0, 1]), big(&[1, 0, 0]), big(&[0, 1, 0])];
        assert_eq!(cofactor_charpoly(&b), big(&[-1, 0, 0, 1]));
    }

    #[test]
    fn sylvester_examples() {
        // Res(x^2 - 1, x - 2) = 3
        assert_eq!(sylvester_resultant(&big(&[-1, 0, 1]), &big(&[-2, 1])), BigInt::from(3));
        assert_eq!(sylvester_resultant(&big(&[1, 0, 1]), &big(&[0, 2])), BigInt::from(4));
    }

    #[test]
    fn roots_of_quadratic() {
        assert!((root_product_discriminant(&[1, -3, 1]) - 5.0).abs() < 1e-9);
        assert!((root_product_discriminant(&[1, 0, 0, 0, 1]) - 256.0).abs() < 1e-6);
    }

    #[test]
    fn brute_factor_degrees() {
        assert_eq!(factor_degrees_brute(&[1, 1, 1, 1, 1], 2), vec![4]);
        assert_eq!(factor_degrees_brute(&[1, 1, 1, 1, 1], 11), vec![1, 1, 1, 1]);
        assert_eq!(factor_degrees_brute(&[1, 1, 1, 1, 1], 19), vec![2, 2]);
        assert!(!is_squarefree_brute(&[1, 2, 1], 7));
        assert!(is_squarefree_brute(&[1, 0, 1], 7));
    }

    #[test]
    fn word_span_examples() {
        let s = vec![vec![0, -1], vec![1, 0]];
        let t = vec![vec![1, 1], vec![0, 1]];
        assert_eq!(word_span_dimension(&[s, t.clone()], 2), 4);
        assert_eq!(word_span_dimension(&[t], 2), 2);
    }

    #[test]
    fn subset_sums_example() {
        assert_eq!(subset_sums(&[2, 3]), [2, 3].into_iter().collect());
        assert!(subset_sums(&[4]).is_empty());
    }
}
