//! Batch front end for the density and Galois deciders.

pub mod input;
pub mod run;

pub use input::{parse_input, parse_str, Input, InputError, PolyTarget};
pub use run::{run, run_to_outcome, without_timings, Mode, RunConfig, RunError, RunOutcome};
