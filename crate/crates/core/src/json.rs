//! JSON-friendly integer encoding: integers inside the IEEE-754 safe range
//! are emitted as numbers, larger ones as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Largest magnitude exactly representable as an IEEE-754 double.
pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// Serializes a borrowed integer as a number or, if too large, a string.
pub struct SafeInt<'a>(pub &'a BigInt);

impl Serialize for SafeInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= MAX_SAFE_INTEGER as u64 => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) struct SafeInts<'a>(pub &'a [BigInt]);

impl Serialize for SafeInts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&SafeInt(v))?;
        }
        seq.end()
    }
}
