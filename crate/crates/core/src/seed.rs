//! Reproducible random streams.
//!
//! Every random choice in the deciders is drawn from a [`StreamSeed`] derived
//! from the caller's master seed by a fixed path of child indices. Two runs
//! with the same master seed therefore see the same primes and the same words
//! no matter how the trials are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A 64-bit seed from which independent child seeds and RNGs are derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StreamSeed(u64);

impl StreamSeed {
    pub const fn new(seed: u64) -> Self {
        StreamSeed(seed)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    /// Seed of the `index`-th child stream.
    pub fn child(self, index: u64) -> StreamSeed {
        let tweak = splitmix64(index ^ 0xa076_1d64_78bd_642f);
        StreamSeed(splitmix64(self.0.rotate_left(17) ^ tweak))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for StreamSeed {
    fn from(seed: u64) -> Self {
        StreamSeed(seed)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
