use crate::input::{parse_input, Input, InputError, PolyTarget};
use serde::Serialize;
use serde_json::{json, Value};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use thiserror::Error;
use zariski_core::poly::is_reciprocal;
use zariski_core::{
    general_zariski_dense, is_hyperoctahedral, is_sn, zariski_dense, Certainty, DensityConfig, DensityVerdict,
    Execution, GaloisConfig, GaloisVerdict, IntPolynomial, PrimeInterval, StreamSeed,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Two random words with generic Galois groups.
    Weyl,
    /// One non-cyclotomic word and an irreducible adjoint action.
    Adjoint,
    /// Galois-group certification of a single polynomial.
    Galois,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub mode: Mode,
    pub epsilon: f64,
    pub seed: u64,
    pub word_constant: f64,
    pub word_length: Option<usize>,
    pub prime_bits: (u32, u32),
    pub trials: usize,
    pub execution: Execution,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, mode: Mode) -> Self {
        RunConfig {
            input: input.into(),
            mode,
            epsilon: 1e-6,
            seed: 0,
            word_constant: 10.0,
            word_length: None,
            prime_bits: (20, 21),
            trials: 1,
            execution: Execution::default(),
        }
    }

    fn check(&self) -> Result<PrimeInterval, RunError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(RunError::Config(format!("epsilon must lie in (0, 1), got {}", self.epsilon)));
        }
        if !(self.word_constant.is_finite() && self.word_constant > 0.0) {
            return Err(RunError::Config(format!(
                "word constant must be positive, got {}",
                self.word_constant
            )));
        }
        if self.word_length == Some(0) {
            return Err(RunError::Config("word length must be positive".into()));
        }
        if self.trials == 0 {
            return Err(RunError::Config("trials must be positive".into()));
        }
        let (lo, hi) = self.prime_bits;
        if lo >= hi {
            return Err(RunError::Config(format!("prime bits must satisfy low < high, got {lo},{hi}")));
        }
        PrimeInterval::from_bits(lo, hi).map_err(|e| RunError::Config(e.to_string()))
    }

    /// Seed of trial `index`.
    pub fn trial_seed(&self, index: usize) -> StreamSeed {
        StreamSeed::new(self.seed).child(index as u64)
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("mode `{mode}` needs {expected} input")]
    WrongInput { mode: &'static str, expected: &'static str },
    #[error("{0}")]
    Domain(#[from] zariski_core::Error),
}

pub const EXIT_CONFIRMED: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Result of a run: the exit code, the JSON report and a one-line summary.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: Value,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
enum TrialResult {
    Density(DensityVerdict),
    Galois { target: &'static str, verdict: GaloisVerdict },
}

impl TrialResult {
    fn positive(&self) -> bool {
        match self {
            TrialResult::Density(v) => v.dense,
            TrialResult::Galois { verdict, .. } => verdict.answer.is_confirmed(),
        }
    }
}

#[derive(Serialize)]
struct TrialRecord {
    index: usize,
    seed: u64,
    result: TrialResult,
}

enum Task {
    Density { gs: zariski_core::GeneratorSet, general: bool, cfg: DensityConfig },
    Galois { poly: IntPolynomial, target: PolyTarget, cfg: GaloisConfig },
}

impl Task {
    fn run(&self, eps: f64, seed: StreamSeed) -> zariski_core::Result<TrialResult> {
        match self {
            Task::Density { gs, general: false, cfg } => zariski_dense(gs, eps, seed, cfg).map(TrialResult::Density),
            Task::Density { gs, general: true, cfg } => {
                general_zariski_dense(gs, eps, seed, cfg).map(TrialResult::Density)
            }
            Task::Galois { poly, target: PolyTarget::Sn, cfg } => {
                is_sn(poly, eps, seed, cfg).map(|verdict| TrialResult::Galois { target: "Sn", verdict })
            }
            Task::Galois {
                poly,
                target: PolyTarget::Hyperoctahedral,
                cfg,
            } => is_hyperoctahedral(poly, eps, seed, cfg).map(|verdict| TrialResult::Galois {
                target: "hyperoctahedral",
                verdict,
            }),
        }
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Weyl => "weyl",
        Mode::Adjoint => "adjoint",
        Mode::Galois => "galois",
    }
}

/// The target used for a polynomial when none is given: monic reciprocal
/// polynomials of even degree are tested against the hyperoctahedral group.
pub fn default_target(poly: &IntPolynomial) -> PolyTarget {
    match poly.degree() {
        Some(d) if d > 0 && d % 2 == 0 && poly.is_monic() && is_reciprocal(poly) => PolyTarget::Hyperoctahedral,
        _ => PolyTarget::Sn,
    }
}

pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    let started = Instant::now();
    let primes = config.check()?;
    let input = parse_input(&config.input)?;
    let parse_time = started.elapsed();

    let galois = GaloisConfig {
        primes,
        execution: config.execution,
    };
    let density = DensityConfig {
        word_constant: config.word_constant,
        word_length: config.word_length,
        galois,
    };
    let (task, input_summary) = match (config.mode, input) {
        (Mode::Weyl | Mode::Adjoint, Input::Group(gs)) => {
            let summary = json!({
                "kind": "group",
                "group": gs.kind(),
                "dim": gs.dim(),
                "generators": gs.generators().len(),
            });
            let general = config.mode == Mode::Adjoint;
            (Task::Density { gs, general, cfg: density }, summary)
        }
        (Mode::Galois, Input::Polynomial { poly, target }) => {
            let target = target.unwrap_or_else(|| default_target(&poly));
            let summary = json!({ "kind": "polynomial", "poly": poly, "degree": poly.degree() });
            (Task::Galois { poly, target, cfg: galois }, summary)
        }
        (Mode::Galois, Input::Group(_)) => {
            return Err(RunError::WrongInput {
                mode: "galois",
                expected: "a polynomial",
            })
        }
        (mode, Input::Polynomial { .. }) => {
            return Err(RunError::WrongInput {
                mode: mode_name(mode),
                expected: "a matrix group",
            })
        }
    };

    let eps = config.epsilon;
    let mut records = Vec::new();
    let mut trial_times = Vec::new();
    let mut failure = None;
    config.execution.scan(
        config.trials,
        |i| {
            let t = Instant::now();
            let result = task.run(eps, config.trial_seed(i));
            (result, t.elapsed())
        },
        |i, (result, elapsed)| {
            trial_times.push(millis(elapsed));
            match result {
                Ok(result) => {
                    let stop = result.positive();
                    records.push(TrialRecord {
                        index: i,
                        seed: config.trial_seed(i).value(),
                        result,
                    });
                    if stop {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                }
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        },
    );
    if let Some(e) = failure {
        return Err(e.into());
    }

    let positive = records.last().is_some_and(|r| r.result.positive());
    let trials_run = records.len();
    let (certainty, error_bound) = if positive {
        (Certainty::Certain, 0.0)
    } else {
        (Certainty::MonteCarlo, eps.powi(trials_run as i32))
    };
    let verdict = match (&task, positive) {
        (Task::Density { .. }, true) => "dense",
        (Task::Density { .. }, false) => "not_dense",
        (Task::Galois { target: PolyTarget::Sn, .. }, true) => "confirmed_sn",
        (Task::Galois { .. }, true) => "confirmed_hyperoctahedral",
        (Task::Galois { .. }, false) => "not_generic",
    };
    let summary = if positive {
        format!("{verdict} (certain) after {trials_run} of {} trial(s)", config.trials)
    } else {
        format!(
            "{verdict} after {trials_run} trial(s); error probability at most {error_bound:e}"
        )
    };
    let report = json!({
        "mode": config.mode,
        "input": input_summary,
        "seed": config.seed,
        "epsilon": eps,
        "word_constant": config.word_constant,
        "word_length": config.word_length,
        "prime_bits": [config.prime_bits.0, config.prime_bits.1],
        "trials_requested": config.trials,
        "trials_run": trials_run,
        "verdict": verdict,
        "certainty": certainty,
        "error_bound": error_bound,
        "trials": records,
        "timings": {
            "parse_ms": millis(parse_time),
            "trial_ms": trial_times,
            "total_ms": millis(started.elapsed()),
        },
    });
    Ok(RunOutcome {
        exit_code: if positive { EXIT_CONFIRMED } else { EXIT_REJECTED },
        report,
        summary,
    })
}

/// Report emitted for runs that fail before producing a verdict.
pub fn error_report(config: &RunConfig, err: &RunError) -> Value {
    json!({
        "mode": config.mode,
        "seed": config.seed,
        "error": err.to_string(),
        "exit_code": EXIT_ERROR,
    })
}

/// Runs and folds errors into an exit code of 2.
pub fn run_to_outcome(config: &RunConfig) -> RunOutcome {
    match run(config) {
        Ok(outcome) => outcome,
        Err(err) => RunOutcome {
            exit_code: EXIT_ERROR,
            report: error_report(config, &err),
            summary: format!("error: {err}"),
        },
    }
}

/// The report without its `timings` field, for reproducibility checks.
pub fn without_timings(report: &Value) -> Value {
    let mut r = report.clone();
    if let Some(obj) = r.as_object_mut() {
        obj.remove("timings");
    }
    r
}
