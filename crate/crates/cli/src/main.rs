use clap::Parser;
use std::path::PathBuf;
use std::process::ExitCode;
use zariski_cli::{run_to_outcome, Mode, RunConfig};
use zariski_core::Execution;

/// Decide Zariski density of integer matrix groups, or certify the Galois
/// group of a polynomial.
///
/// Exit status: 0 dense/confirmed, 1 not dense/not generic, 2 input error.
#[derive(Parser, Debug)]
#[command(name = "zariski", version)]
struct Args {
    /// JSON generator set, or a polynomial (JSON or whitespace-separated coefficients, constant first).
    input: PathBuf,

    #[arg(long, value_enum, default_value = "weyl")]
    mode: Mode,

    /// Error bound for NO answers, a decimal or a fraction such as 1/1000.
    #[arg(long, default_value = "1e-6", value_parser = parse_epsilon)]
    epsilon: f64,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Constant c in the word length max(16, ceil(c ln(1/epsilon))).
    #[arg(long, default_value_t = 10.0)]
    word_constant: f64,

    /// Fixed word length, overriding --word-constant.
    #[arg(long)]
    word_length: Option<usize>,

    /// Primes are drawn from [2^LOW, 2^HIGH).
    #[arg(long, default_value = "20,21", value_parser = parse_bits, value_name = "LOW,HIGH")]
    prime_bits: (u32, u32),

    /// Independent repetitions; any positive answer is final.
    #[arg(long, default_value_t = 1)]
    trials: usize,

    /// Also write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,

    /// Print nothing on stdout or stderr except errors.
    #[arg(long)]
    quiet: bool,

    /// Evaluate trials on a single thread.
    #[arg(long)]
    sequential: bool,
}

fn parse_epsilon(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            p / q
        }
        None => s.parse().map_err(|_| format!("`{s}` is not a number"))?,
    };
    if value > 0.0 && value < 1.0 {
        Ok(value)
    } else {
        Err(format!("epsilon must lie in (0, 1), got {s}"))
    }
}

fn parse_bits(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LOW,HIGH")?;
    let lo = lo.trim().parse().map_err(|_| format!("bad low exponent `{lo}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad high exponent `{hi}`"))?;
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let config = RunConfig {
        input: args.input,
        mode: args.mode,
        epsilon: args.epsilon,
        seed: args.seed,
        word_constant: args.word_constant,
        word_length: args.word_length,
        prime_bits: args.prime_bits,
        trials: args.trials,
        execution: if args.sequential { Execution::Sequential } else { Execution::default() },
    };
    let outcome = run_to_outcome(&config);
    let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if !args.quiet {
        println!("{text}");
        eprintln!("{}", outcome.summary);
    } else if outcome.exit_code == 2 {
        eprintln!("{}", outcome.summary);
    }
    ExitCode::from(outcome.exit_code as u8)
}
