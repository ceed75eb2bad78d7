//! Zariski-density deciders for subgroups of `SL(n, Z)` and `Sp(2n, Z)`.
//!
//! [`zariski_dense`] certifies density through the Weyl group: two random
//! words that do not commute, whose characteristic polynomials have the
//! generic Galois group (`S_n`, or `C_2 wr S_n` in the symplectic case), and
//! for `Sp` an irreducible standard action. [`general_zariski_dense`] uses a
//! single non-cyclotomic word and irreducibility of the adjoint action.
//!
//! YES answers are certain. NO answers are wrong with probability at most
//! the requested `eps`.

use crate::error::{check_epsilon, Error, Result};
use crate::galois::{is_hyperoctahedral, is_sn, GaloisConfig, GaloisVerdict};
use crate::linalg::rank::{IntegerEchelon, ModularEchelon, DEFAULT_MODULUS};
use crate::linalg::{
    adjugate_inverse, characteristic_polynomial, commutes, random_word, GeneratorSet, GroupKind, IntegerMatrix,
};
use crate::poly::{is_cyclotomic_product, IntPolynomial};
use crate::seed::StreamSeed;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// An integer basis of the Lie algebra of `SL(dim)` or `Sp(dim)`.
///
/// For `SL` the order is: `E_ij` with `i < j`, then `E_kk - E_{k+1,k+1}`,
/// then `E_ij` with `i > j`. For `Sp(2m)` with form `[[0, I], [-I, 0]]`:
/// `E_ij - E_{m+j,m+i}`, then the symmetric upper-right block, then the
/// symmetric lower-left block. Coordinates of integer Lie-algebra elements
/// are integers in both bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointBasis {
    kind: GroupKind,
    dim: usize,
    elements: Vec<IntegerMatrix>,
}

fn unit(dim: usize, cells: &[(usize, usize, i64)]) -> IntegerMatrix {
    IntegerMatrix::from_fn(dim, |i, j| {
        cells
            .iter()
            .filter(|&&(r, c, _)| r == i && c == j)
            .map(|&(_, _, v)| BigInt::from(v))
            .sum()
    })
}

impl AdjointBasis {
    pub fn new(kind: GroupKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut elements = Vec::new();
        match kind {
            GroupKind::SpecialLinear => {
                for i in 0..dim {
                    for j in i + 1..dim {
                        elements.push(unit(dim, &[(i, j, 1)]));
                    }
                }
                for k in 0..dim - 1 {
                    elements.push(unit(dim, &[(k, k, 1), (k + 1, k + 1, -1)]));
                }
                for i in 0..dim {
                    for j in 0..i {
                        elements.push(unit(dim, &[(i, j, 1)]));
                    }
                }
            }
            GroupKind::Symplectic => {
                if dim % 2 == 1 {
                    return Err(Error::BadSymplecticDimension(dim));
                }
                let m = dim / 2;
                for i in 0..m {
                    for j in 0..m {
                        elements.push(unit(dim, &[(i, j, 1), (m + j, m + i, -1)]));
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        let cells = if i == j { vec![(i, m + i, 1)] } else { vec![(i, m + j, 1), (j, m + i, 1)] };
                        elements.push(unit(dim, &cells));
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        let cells = if i == j { vec![(m + i, i, 1)] } else { vec![(m + i, j, 1), (m + j, i, 1)] };
                        elements.push(unit(dim, &cells));
                    }
                }
            }
        }
        Ok(AdjointBasis { kind, dim, elements })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Size of the matrices in the Lie algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the Lie algebra.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[IntegerMatrix] {
        &self.elements
    }

    /// Coordinates of a Lie-algebra element. The result is meaningless if
    /// `x` is not in the algebra.
    pub fn coordinates(&self, x: &IntegerMatrix) -> Vec<BigInt> {
        let n = self.dim;
        let mut out = Vec::with_capacity(self.len());
        match self.kind {
            GroupKind::SpecialLinear => {
                for i in 0..n {
                    for j in i + 1..n {
                        out.push(x.get(i, j).clone());
                    }
                }
                let mut acc = BigInt::zero();
                for k in 0..n - 1 {
                    acc += x.get(k, k);
                    out.push(acc.clone());
                }
                for i in 0..n {
                    for j in 0..i {
                        out.push(x.get(i, j).clone());
                    }
                }
            }
            GroupKind::Symplectic => {
                let m = n / 2;
                for i in 0..m {
                    for j in 0..m {
                        out.push(x.get(i, j).clone());
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        out.push(x.get(i, m + j).clone());
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        out.push(x.get(m + i, j).clone());
                    }
                }
            }
        }
        out
    }

    /// The linear combination of basis elements with the given coordinates.
    pub fn combine(&self, coords: &[BigInt]) -> IntegerMatrix {
        assert_eq!(coords.len(), self.len(), "coordinate count mismatch");
        let mut entries = vec![BigInt::zero(); self.dim * self.dim];
        for (c, b) in coords.iter().zip(&self.elements) {
            if c.is_zero() {
                continue;
            }
            for (e, v) in entries.iter_mut().zip(b.entries()) {
                if !v.is_zero() {
                    *e += c * v;
                }
            }
        }
        IntegerMatrix::from_fn(self.dim, |i, j| std::mem::take(&mut entries[i * self.dim + j]))
    }

    /// Matrix of `X -> g X g_inv` in this basis; column `j` holds the
    /// coordinates of the conjugate of basis element `j`.
    pub fn conjugation(&self, g: &IntegerMatrix, g_inv: &IntegerMatrix) -> IntegerMatrix {
        let columns: Vec<Vec<BigInt>> = self
            .elements
            .iter()
            .map(|b| self.coordinates(&g.product(b).product(g_inv)))
            .collect();
        IntegerMatrix::from_fn(self.len(), |i, j| columns[j][i].clone())
    }

    /// The adjoint matrix of a determinant-one `g`.
    pub fn adjoint(&self, g: &IntegerMatrix) -> Result<IntegerMatrix> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: g.dim(),
                right: self.dim,
            });
        }
        Ok(self.conjugation(g, &adjugate_inverse(g)?))
    }
}

/// Adjoint matrices of the generators, in generator order.
pub fn adjoint_matrices(gs: &GeneratorSet) -> Vec<IntegerMatrix> {
    let basis = AdjointBasis::new(gs.kind(), gs.dim()).expect("validated generator set");
    gs.generators()
        .iter()
        .zip(gs.inverses())
        .map(|(g, inv)| basis.conjugation(g, inv))
        .collect()
}

/// Outcome of the algebra-span computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSpan {
    pub irreducible: bool,
    /// Dimension of the unital algebra generated by the matrices.
    pub dimension: usize,
    /// `dim^2`, the dimension of the full matrix algebra.
    pub target: usize,
    /// Number of multiplication rounds until the span stabilized.
    pub rounds: usize,
    /// Whether a rank deficiency modulo the working prime was re-checked
    /// over the integers.
    pub exact_fallback: bool,
}

/// Grows the span of `{I}` under left multiplication by `mats` until it is
/// closed, and reports whether it is all of `M_dim`. By Burnside's theorem,
/// that holds exactly when the matrices act irreducibly over C.
pub fn is_irreducible_algebra(mats: &[IntegerMatrix], dim: usize) -> Result<AlgebraSpan> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    for (index, m) in mats.iter().enumerate() {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: m.dim(),
                right: dim,
            }
            .at_generator(index));
        }
    }
    let target = dim * dim;
    let mut modular = ModularEchelon::new(target, DEFAULT_MODULUS);
    let (dimension, rounds) = closure(mats, dim, |v| modular.insert_integer(v.entries()));
    if dimension == target {
        return Ok(AlgebraSpan {
            irreducible: true,
            dimension,
            target,
            rounds,
            exact_fallback: false,
        });
    }
    // The modular rank is only a lower bound; settle it exactly.
    let mut exact = IntegerEchelon::new(target);
    let (dimension, rounds) = closure(mats, dim, |v| exact.insert(v.entries()));
    Ok(AlgebraSpan {
        irreducible: dimension == target,
        dimension,
        target,
        rounds,
        exact_fallback: true,
    })
}

/// Breadth-first closure; `insert` returns whether a matrix enlarged the span.
fn closure(mats: &[IntegerMatrix], dim: usize, mut insert: impl FnMut(&IntegerMatrix) -> bool) -> (usize, usize) {
    let target = dim * dim;
    let identity = IntegerMatrix::identity(dim);
    insert(&identity);
    let mut count = 1;
    let mut frontier = vec![identity];
    let mut rounds = 0;
    while !frontier.is_empty() && count < target {
        rounds += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for g in mats {
                let w = g.product(v);
                if insert(&w) {
                    count += 1;
                    next.push(w);
                    if count == target {
                        return (count, rounds);
                    }
                }
            }
        }
        frontier = next;
    }
    (count, rounds)
}

/// [`is_irreducible_algebra`] for rational matrices. Each matrix is scaled
/// to an integer one, which leaves the generated unital algebra unchanged.
pub fn is_irreducible_algebra_rational(mats: &[Vec<Vec<BigRational>>], dim: usize) -> Result<AlgebraSpan> {
    let scaled = mats
        .iter()
        .enumerate()
        .map(|(index, rows)| {
            let lcm = rows
                .iter()
                .flatten()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = rows
                .iter()
                .map(|r| r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect::<Vec<_>>())
                .collect::<Vec<_>>();
            IntegerMatrix::from_rows(ints).map_err(|e| e.at_generator(index))
        })
        .collect::<Result<Vec<_>>>()?;
    is_irreducible_algebra(&scaled, dim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    Certain,
    MonteCarlo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Standard,
    Adjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisTarget {
    Sn,
    Hyperoctahedral,
}

/// One recorded step of a density decision.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TrailStep {
    /// `SL(1)` is trivial and every subgroup is dense.
    TrivialGroup,
    Word {
        label: &'static str,
        length: usize,
        charpoly: IntPolynomial,
        max_entry_bits: u64,
    },
    Commutation {
        commute: bool,
    },
    Galois {
        word: &'static str,
        target: GaloisTarget,
        verdict: GaloisVerdict,
    },
    /// Whether the characteristic polynomial of a word is a product of
    /// cyclotomic polynomials (all eigenvalues roots of unity).
    Cyclotomic {
        word: &'static str,
        cyclotomic: bool,
    },
    Irreducibility {
        representation: Representation,
        span: AlgebraSpan,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityVerdict {
    pub dense: bool,
    pub certainty: Certainty,
    pub epsilon: f64,
    pub word_length: usize,
    pub trail: Vec<TrailStep>,
}

impl DensityVerdict {
    fn finish(dense: bool, epsilon: f64, word_length: usize, trail: Vec<TrailStep>) -> Self {
        DensityVerdict {
            dense,
            certainty: if dense { Certainty::Certain } else { Certainty::MonteCarlo },
            epsilon,
            word_length,
            trail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DensityConfig {
    /// `c` in the word length `max(16, ceil(c ln(1/eps)))`.
    pub word_constant: f64,
    /// Fixed word length, overriding the formula.
    pub word_length: Option<usize>,
    pub galois: GaloisConfig,
}

impl Default for DensityConfig {
    fn default() -> Self {
        DensityConfig {
            word_constant: 10.0,
            word_length: None,
            galois: GaloisConfig::default(),
        }
    }
}

pub const MIN_WORD_LENGTH: usize = 16;

pub fn word_length(eps: f64, cfg: &DensityConfig) -> Result<usize> {
    check_epsilon(eps)?;
    match cfg.word_length {
        Some(0) => Err(Error::ZeroWordLength),
        Some(n) => Ok(n),
        None => {
            let c = cfg.word_constant;
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::InvalidWordConstant(c));
            }
            Ok(MIN_WORD_LENGTH.max((c * (1.0 / eps).ln()).ceil() as usize))
        }
    }
}

const STREAM_WORD_1: u64 = 1;
const STREAM_WORD_2: u64 = 2;
const STREAM_GALOIS_1: u64 = 3;
const STREAM_GALOIS_2: u64 = 4;

struct SampledWord {
    word: IntegerMatrix,
    charpoly: IntPolynomial,
}

impl SampledWord {
    fn new(gs: &GeneratorSet, length: usize, seed: StreamSeed) -> Self {
        let word = random_word(gs, length, &mut seed.rng());
        let charpoly = characteristic_polynomial(&word);
        SampledWord { word, charpoly }
    }

    fn step(&self, label: &'static str, length: usize) -> TrailStep {
        TrailStep::Word {
            label,
            length,
            charpoly: self.charpoly.clone(),
            max_entry_bits: self.word.max_abs_entry().bits(),
        }
    }
}

fn is_trivial(gs: &GeneratorSet) -> bool {
    gs.kind() == GroupKind::SpecialLinear && gs.dim() == 1
}

/// Decides Zariski density of `<gs>` in `SL(n)` or `Sp(2n)` through the
/// Galois groups of two random words.
pub fn zariski_dense(gs: &GeneratorSet, eps: f64, seed: StreamSeed, cfg: &DensityConfig) -> Result<DensityVerdict> {
    let length = word_length(eps, cfg)?;
    if is_trivial(gs) {
        return Ok(DensityVerdict::finish(true, eps, length, vec![TrailStep::TrivialGroup]));
    }
    let exec = cfg.galois.execution;
    let (w1, w2) = exec.join(
        || SampledWord::new(gs, length, seed.child(STREAM_WORD_1)),
        || SampledWord::new(gs, length, seed.child(STREAM_WORD_2)),
    );
    let mut trail = vec![w1.step("w1", length), w2.step("w2", length)];

    let commute = commutes(&w1.word, &w2.word)?;
    trail.push(TrailStep::Commutation { commute });
    if commute {
        return Ok(DensityVerdict::finish(false, eps, length, trail));
    }

    let target = match gs.kind() {
        GroupKind::SpecialLinear => GaloisTarget::Sn,
        GroupKind::Symplectic => GaloisTarget::Hyperoctahedral,
    };
    let certify = |w: &SampledWord, stream: u64| {
        let s = seed.child(stream);
        match target {
            GaloisTarget::Sn => is_sn(&w.charpoly, eps / 2.0, s, &cfg.galois),
            GaloisTarget::Hyperoctahedral => is_hyperoctahedral(&w.charpoly, eps / 2.0, s, &cfg.galois),
        }
    };
    let (v1, v2) = exec.join(|| certify(&w1, STREAM_GALOIS_1), || certify(&w2, STREAM_GALOIS_2));

    // S_2 is abelian, so for 2x2 matrices the Galois group alone does not
    // force infinite order.
    let small = gs.dim() == 2;
    for (label, w, verdict) in [("w1", &w1, v1), ("w2", &w2, v2)] {
        let verdict = verdict?;
        let confirmed = verdict.answer.is_confirmed();
        trail.push(TrailStep::Galois {
            word: label,
            target,
            verdict,
        });
        if !confirmed {
            return Ok(DensityVerdict::finish(false, eps, length, trail));
        }
        if small {
            let cyclotomic = is_cyclotomic_product(&w.charpoly)?;
            trail.push(TrailStep::Cyclotomic { word: label, cyclotomic });
            if cyclotomic {
                return Ok(DensityVerdict::finish(false, eps, length, trail));
            }
        }
    }

    if gs.kind() == GroupKind::Symplectic {
        let span = is_irreducible_algebra(gs.generators(), gs.dim())?;
        let irreducible = span.irreducible;
        trail.push(TrailStep::Irreducibility {
            representation: Representation::Standard,
            span,
        });
        return Ok(DensityVerdict::finish(irreducible, eps, length, trail));
    }
    Ok(DensityVerdict::finish(true, eps, length, trail))
}

/// Decides Zariski density from one random word with a non-cyclotomic
/// characteristic polynomial and an irreducible adjoint action.
pub fn general_zariski_dense(
    gs: &GeneratorSet,
    eps: f64,
    seed: StreamSeed,
    cfg: &DensityConfig,
) -> Result<DensityVerdict> {
    let length = word_length(eps, cfg)?;
    if is_trivial(gs) {
        return Ok(DensityVerdict::finish(true, eps, length, vec![TrailStep::TrivialGroup]));
    }
    let w = SampledWord::new(gs, length, seed.child(STREAM_WORD_1));
    let mut trail = vec![w.step("w", length)];
    let cyclotomic = is_cyclotomic_product(&w.charpoly)?;
    trail.push(TrailStep::Cyclotomic { word: "w", cyclotomic });
    if cyclotomic {
        return Ok(DensityVerdict::finish(false, eps, length, trail));
    }
    let adjoint = adjoint_matrices(gs);
    let dim = adjoint[0].dim();
    let span = is_irreducible_algebra(&adjoint, dim)?;
    let irreducible = span.irreducible;
    trail.push(TrailStep::Irreducibility {
        representation: Representation::Adjoint,
        span,
    });
    Ok(DensityVerdict::finish(irreducible, eps, length, trail))
}
