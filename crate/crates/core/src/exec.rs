//! Data-parallel evaluation of independent trials.
//!
//! Trials are evaluated in fixed-size batches (in parallel when the
//! `parallel` feature is enabled and [`Execution::Parallel`] is selected) and
//! then consumed strictly in index order. Whatever the schedule, the consumer
//! sees the same sequence and stops at the same index, so results are
//! identical between the two execution modes.

use serde::Serialize;
use std::ops::ControlFlow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// Uses rayon when compiled with the `parallel` feature, otherwise
    /// behaves exactly like `Sequential`.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True if work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    fn batch_size(self) -> usize {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return 2 * rayon::current_num_threads().max(1);
        }
        1
    }

    /// Evaluates `f(i)` for every `i` in `0..count`, results in index order.
    pub fn map<T, F>(self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..count).into_par_iter().map(f).collect();
        }
        (0..count).map(f).collect()
    }

    /// Runs two independent computations, concurrently if possible.
    pub fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return rayon::join(a, b);
        }
        (a(), b())
    }

    /// Evaluates trials `0..count` and feeds them in index order to `consume`
    /// until it breaks. Returns the number of trials consumed.
    pub fn scan<T, F, C>(self, count: usize, eval: F, mut consume: C) -> usize
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
        C: FnMut(usize, T) -> ControlFlow<()>,
    {
        let batch = self.batch_size();
        let mut start = 0;
        while start < count {
            let end = (start + batch).min(count);
            let results = self.map(end - start, |k| eval(start + k));
            for (k, item) in results.into_iter().enumerate() {
                if consume(start + k, item).is_break() {
                    return start + k + 1;
                }
            }
            start = end;
        }
        count
    }
}
