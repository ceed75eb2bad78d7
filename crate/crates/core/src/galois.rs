//! One-sided Monte Carlo certification of large Galois groups.
//!
//! Every YES answer here is backed by a group-theoretic certificate built
//! from Frobenius cycle types: the factorization pattern of `f` modulo an
//! unramified prime `q` is the cycle type of some element of the Galois
//! group. All such elements live in the one Galois group of `f`, so patterns
//! observed at different primes may be combined freely into a certificate.
//!
//! * Irreducibility: if no proper nonempty subset of roots is a union of
//!   orbits for every sampled element (the sumsets of the observed patterns
//!   have empty intersection), the group is transitive.
//! * Primitivity: an element containing a cycle of prime length `l > n/2`
//!   yields an `l`-cycle after raising to the lcm of the other cycle lengths,
//!   and a transitive group with such a cycle has no nontrivial blocks.
//! * `S_n`: transitive + primitive + a transposition (a pattern with exactly
//!   one 2 and all other parts odd), or for `n >= 13` transitive + a prime
//!   cycle of length in `(n/2, n-5)` (Jordan: `A_n` or `S_n`) + a non-square
//!   discriminant.
//! * `C_2 wr S_n`: the trace polynomial has group `S_n` and `f` shows a
//!   transposition pattern.
//!
//! NO answers mean the certificate did not appear within a trial budget
//! sized so that, were the group generic, the miss would have probability at
//! most `eps`.

use crate::error::{check_epsilon, Error, Result};
use crate::exec::Execution;
use crate::finite_field::{factor_degrees_mod, is_prime_u64, random_prime_avoiding, DegreeMultiset, PrimeInterval};
use crate::poly::{discriminant, trace_polynomial, IntPolynomial};
use crate::seed::StreamSeed;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

/// Asymptotic density constant of odd-order permutations, `o_n ~ c n!/sqrt(n)`.
pub const ODD_ORDER_DENSITY: f64 = 0.8;

/// Below this degree the transposition test is used; at or above it, the
/// long-prime-cycle test plus the discriminant.
pub const LONG_CYCLE_THRESHOLD: usize = 13;

/// Achievable proper subset sums of a partition, excluding 0 and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumsetState {
    n: usize,
    survivors: BTreeSet<usize>,
}

impl SumsetState {
    /// All of `{1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        SumsetState {
            n,
            survivors: (1..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn survivors(&self) -> &BTreeSet<usize> {
        &self.survivors
    }

    pub fn is_empty(&self) -> bool {
        self.survivors.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.survivors.contains(&s)
    }

    pub fn intersect(&mut self, other: &SumsetState) {
        self.survivors.retain(|s| other.survivors.contains(s));
    }
}

/// Subset sums of `parts` by the dynamic program `X <- X u (X + x_i)`.
pub fn sumset(parts: &[usize]) -> SumsetState {
    let n: usize = parts.iter().sum();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &x in parts {
        for s in (x..=n).rev() {
            if reach[s - x] {
                reach[s] = true;
            }
        }
    }
    SumsetState {
        n,
        survivors: (1..n).filter(|&s| reach[s]).collect(),
    }
}

/// Exactly one part equal to 2, every other part odd.
pub fn has_transposition_pattern(d: &DegreeMultiset) -> bool {
    d.count(2) == 1 && d.degrees().iter().all(|&x| x == 2 || x % 2 == 1)
}

/// Some part is a prime `l` with `n/2 < l < n - upper_slack`.
pub fn has_long_prime_cycle(d: &DegreeMultiset, n: usize, upper_slack: usize) -> bool {
    d.degrees()
        .iter()
        .any(|&l| 2 * l > n && l + upper_slack < n && is_prime_u64(l as u64))
}

/// Primitivity evidence for a transitive group of degree `n`. Small degrees
/// accept any prime part `l` with `n/2 < l <= n`; from
/// [`LONG_CYCLE_THRESHOLD`] on, the window `(n/2, n-4)`.
pub fn has_primitivity_witness(d: &DegreeMultiset, n: usize) -> bool {
    if n < LONG_CYCLE_THRESHOLD {
        d.degrees()
            .iter()
            .any(|&l| 2 * l > n && l <= n && is_prime_u64(l as u64))
    } else {
        has_long_prime_cycle(d, n, 4)
    }
}

fn log_inv(eps: f64) -> f64 {
    (1.0 / eps).ln()
}

/// Four random elements of `S_n` are invariably transitive with probability
/// at least 0.95, so each block of four fails with probability at most 1/20.
pub fn transitivity_trials(eps: f64) -> usize {
    4 * (log_inv(eps) / 20f64.ln()).ceil() as usize
}

/// Transposition-type elements have density about `c / (2 sqrt(n-1))`.
pub fn transposition_trials(n: usize, eps: f64) -> usize {
    let n = n.max(3) as f64;
    (2.0 * (n - 1.0).sqrt() / ODD_ORDER_DENSITY * log_inv(eps)).ceil() as usize
}

/// Elements with a long prime cycle have density about `log 2 / log n`.
pub fn long_cycle_trials(n: usize, eps: f64) -> usize {
    let n = n.max(2) as f64;
    (n.ln() / 2f64.ln() * log_inv(eps)).ceil() as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisAnswer {
    ConfirmedSn,
    ConfirmedHyperoctahedral,
    Irreducible,
    NotGeneric,
}

impl GaloisAnswer {
    pub fn is_confirmed(self) -> bool {
        matches!(self, GaloisAnswer::ConfirmedSn | GaloisAnswer::ConfirmedHyperoctahedral)
    }
}

/// Which sampling loop produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Transitivity,
    Primitivity,
    Transposition,
    LongCycle,
    /// Transposition search on a reciprocal polynomial itself.
    Lift,
}

/// Why a NotGeneric answer was given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    RepeatedRoots,
    NoTransitivityCertificate,
    NoPrimitivityCertificate,
    NoTransposition,
    SquareDiscriminant,
    NoLongPrimeCycle,
    TracePolynomialNotSymmetric,
}

/// How primitivity was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Primitivity {
    /// Transitive groups of prime degree are primitive.
    PrimeDegree,
    LongPrimeCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub stage: Stage,
    pub prime: u64,
    pub degrees: DegreeMultiset,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceCertificate {
    pub polynomial: IntPolynomial,
    pub verdict: GaloisVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaloisVerdict {
    pub answer: GaloisAnswer,
    /// Error bound honored by the trial counts (meaningful for NO answers).
    pub epsilon: f64,
    /// Every sampled prime and its pattern, in sampling order.
    pub witnesses: Vec<Witness>,
    pub trials_used: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitivity: Option<Primitivity>,
    /// For the hyperoctahedral test: the trace polynomial and its verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Box<TraceCertificate>>,
}

impl GaloisVerdict {
    fn new(answer: GaloisAnswer, epsilon: f64, witnesses: Vec<Witness>) -> Self {
        GaloisVerdict {
            answer,
            epsilon,
            trials_used: witnesses.len(),
            witnesses,
            reason: None,
            primitivity: None,
            trace: None,
        }
    }

    fn not_generic(epsilon: f64, witnesses: Vec<Witness>, reason: Reason) -> Self {
        GaloisVerdict {
            reason: Some(reason),
            ..Self::new(GaloisAnswer::NotGeneric, epsilon, witnesses)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct GaloisConfig {
    pub primes: PrimeInterval,
    pub execution: Execution,
}

// Child-stream indices, one per sampling loop.
const STREAM_TRANSITIVITY: u64 = 1;
const STREAM_PRIMITIVITY: u64 = 2;
const STREAM_FINAL: u64 = 3;
const STREAM_LIFT: u64 = 4;
const STREAM_TRACE: u64 = 5;

struct Sampler<'a> {
    f: &'a IntPolynomial,
    disc: &'a BigInt,
    cfg: &'a GaloisConfig,
}

impl Sampler<'_> {
    fn draw(&self, seed: StreamSeed, stage: Stage, index: usize) -> Result<Witness> {
        let mut rng = seed.child(index as u64).rng();
        let prime = random_prime_avoiding(self.disc, self.cfg.primes, &mut rng)?;
        let degrees = factor_degrees_mod(self.f, prime)?;
        Ok(Witness { stage, prime, degrees })
    }

    /// Feeds up to `trials` samples, in trial order, to `step` until it
    /// breaks. Every consumed sample is appended to `log`.
    fn run(
        &self,
        seed: StreamSeed,
        stage: Stage,
        trials: usize,
        log: &mut Vec<Witness>,
        mut step: impl FnMut(&DegreeMultiset) -> ControlFlow<()>,
    ) -> Result<bool> {
        let mut hit = false;
        let mut failure = None;
        self.cfg.execution.scan(
            trials,
            |i| self.draw(seed, stage, i),
            |_, sample| match sample {
                Ok(w) => {
                    let flow = step(&w.degrees);
                    log.push(w);
                    hit = flow.is_break();
                    flow
                }
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            },
        );
        failure.map_or(Ok(hit), Err)
    }

    fn search(
        &self,
        seed: StreamSeed,
        stage: Stage,
        trials: usize,
        log: &mut Vec<Witness>,
        accept: impl Fn(&DegreeMultiset) -> bool,
    ) -> Result<bool> {
        self.run(seed, stage, trials, log, |d| {
            if accept(d) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
    }

    /// Intersects sumsets of sampled patterns until the intersection is empty.
    fn transitivity(&self, n: usize, eps: f64, seed: StreamSeed, log: &mut Vec<Witness>) -> Result<bool> {
        let mut common = SumsetState::full(n);
        self.run(seed, Stage::Transitivity, transitivity_trials(eps), log, |d| {
            common.intersect(&sumset(d.degrees()));
            if common.is_empty() {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
    }
}

fn is_perfect_square(d: &BigInt) -> bool {
    !d.is_negative() && {
        let r = d.sqrt();
        &r * &r == *d
    }
}

/// Either certifies that `f` is irreducible over Q or reports that its
/// Galois group is (with probability at least `1 - eps`) not transitive.
pub fn is_transitive(f: &IntPolynomial, eps: f64, seed: StreamSeed, cfg: &GaloisConfig) -> Result<GaloisVerdict> {
    check_epsilon(eps)?;
    let n = f.monic_degree()?;
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let sampler = Sampler { f, disc: &disc, cfg };
    let mut log = Vec::new();
    if sampler.transitivity(n, eps, seed.child(STREAM_TRANSITIVITY), &mut log)? {
        Ok(GaloisVerdict::new(GaloisAnswer::Irreducible, eps, log))
    } else {
        Ok(GaloisVerdict::not_generic(eps, log, Reason::NoTransitivityCertificate))
    }
}

/// Certifies that the Galois group of the monic `f` is the full symmetric
/// group, or reports NotGeneric with error probability at most `eps`.
pub fn is_sn(f: &IntPolynomial, eps: f64, seed: StreamSeed, cfg: &GaloisConfig) -> Result<GaloisVerdict> {
    check_epsilon(eps)?;
    let n = f.monic_degree()?;
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Ok(GaloisVerdict::not_generic(eps, Vec::new(), Reason::RepeatedRoots));
    }
    let sampler = Sampler { f, disc: &disc, cfg };
    let mut log = Vec::new();

    // S_1 and S_2 are transitive groups of their degree; nothing else to check.
    let stage_eps = if n <= 2 { eps } else { eps / 3.0 };
    if !sampler.transitivity(n, stage_eps, seed.child(STREAM_TRANSITIVITY), &mut log)? {
        return Ok(GaloisVerdict::not_generic(eps, log, Reason::NoTransitivityCertificate));
    }
    if n <= 2 {
        return Ok(GaloisVerdict::new(GaloisAnswer::ConfirmedSn, eps, log));
    }

    let primitivity = if is_prime_u64(n as u64) {
        Primitivity::PrimeDegree
    } else {
        let trials = long_cycle_trials(n, stage_eps);
        let seed = seed.child(STREAM_PRIMITIVITY);
        if !sampler.search(seed, Stage::Primitivity, trials, &mut log, |d| has_primitivity_witness(d, n))? {
            return Ok(GaloisVerdict::not_generic(eps, log, Reason::NoPrimitivityCertificate));
        }
        Primitivity::LongPrimeCycle
    };

    let seed = seed.child(STREAM_FINAL);
    let (found, miss) = if n < LONG_CYCLE_THRESHOLD {
        let trials = transposition_trials(n, stage_eps);
        let found = sampler.search(seed, Stage::Transposition, trials, &mut log, has_transposition_pattern)?;
        (found, Reason::NoTransposition)
    } else {
        if is_perfect_square(&disc) {
            let mut v = GaloisVerdict::not_generic(eps, log, Reason::SquareDiscriminant);
            v.primitivity = Some(primitivity);
            return Ok(v);
        }
        let trials = long_cycle_trials(n, stage_eps);
        let found = sampler.search(seed, Stage::LongCycle, trials, &mut log, |d| has_long_prime_cycle(d, n, 5))?;
        (found, Reason::NoLongPrimeCycle)
    };
    let mut v = if found {
        GaloisVerdict::new(GaloisAnswer::ConfirmedSn, eps, log)
    } else {
        GaloisVerdict::not_generic(eps, log, miss)
    };
    v.primitivity = Some(primitivity);
    Ok(v)
}

/// Certifies that the Galois group of the monic reciprocal `f` of degree
/// `2n` is the hyperoctahedral group `C_2 wr S_n`, or reports NotGeneric
/// with error probability at most `eps`.
pub fn is_hyperoctahedral(
    f: &IntPolynomial,
    eps: f64,
    seed: StreamSeed,
    cfg: &GaloisConfig,
) -> Result<GaloisVerdict> {
    check_epsilon(eps)?;
    let trace_poly = trace_polynomial(f)?;
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Ok(GaloisVerdict::not_generic(eps, Vec::new(), Reason::RepeatedRoots));
    }
    let n = trace_poly.degree().unwrap_or(0);
    let stage_eps = eps / 2.0;

    let trace_verdict = is_sn(&trace_poly, stage_eps, seed.child(STREAM_TRACE), cfg)?;
    let trace = Some(Box::new(TraceCertificate {
        polynomial: trace_poly,
        verdict: trace_verdict,
    }));
    if trace.as_ref().unwrap().verdict.answer != GaloisAnswer::ConfirmedSn {
        let mut v = GaloisVerdict::not_generic(eps, Vec::new(), Reason::TracePolynomialNotSymmetric);
        v.trace = trace;
        return Ok(v);
    }

    let sampler = Sampler { f, disc: &disc, cfg };
    let mut log = Vec::new();
    let trials = transposition_trials(n, stage_eps);
    let found = sampler.search(seed.child(STREAM_LIFT), Stage::Lift, trials, &mut log, has_transposition_pattern)?;
    let mut v = if found {
        GaloisVerdict::new(GaloisAnswer::ConfirmedHyperoctahedral, eps, log)
    } else {
        GaloisVerdict::not_generic(eps, log, Reason::NoTransposition)
    };
    v.trace = trace;
    Ok(v)
}
