//! IEEE-754 binary32 helpers.
//!
//! SVL's `Float` is binary32 with round-to-nearest-even. [`F32`] wraps the
//! bit pattern so float constants can live in hash maps and sorted sets with
//! a total order (needed for deterministic diagnostics and reports).

use std::cmp::Ordering;
use std::fmt;

/// Smallest positive normal binary32 value, 2^-126.
pub const MIN_NORMAL: f32 = 1.17549435e-38;

/// A binary32 value identified by its bit pattern.
///
/// Equality and ordering are total: NaNs compare equal to themselves and
/// sort after +inf; -0.0 and +0.0 are distinct values. All arithmetic is
/// done on the underlying `f32`.
#[derive(Clone, Copy)]
pub struct F32(pub u32);

impl F32 {
    pub fn from_f32(v: f32) -> Self {
        F32(v.to_bits())
    }

    pub fn value(self) -> f32 {
        f32::from_bits(self.0)
    }

    pub fn is_nan(self) -> bool {
        self.value().is_nan()
    }

    pub fn is_finite(self) -> bool {
        self.value().is_finite()
    }

    /// Total order key: flips the encoding so negatives sort below
    /// positives; NaN payloads end up above +inf.
    fn key(self) -> i64 {
        let b = self.0;
        if b & 0x8000_0000 == 0 {
            b as i64
        } else {
            -((b & 0x7fff_ffff) as i64) - 1
        }
    }
}

impl PartialEq for F32 {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}
impl Eq for F32 {}

impl PartialOrd for F32 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for F32 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::hash::Hash for F32 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Display for F32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        if v.is_nan() {
            write!(f, "NaN")
        } else {
            // shortest round-trip form
            write!(f, "{:?}", v)
        }
    }
}

impl fmt::Debug for F32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<f32> for F32 {
    fn from(v: f32) -> Self {
        F32::from_f32(v)
    }
}

/// Classification of a binary32 payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloatClass {
    Zero,
    Subnormal,
    Normal,
    Infinite,
    Nan,
}

pub fn classify(v: f32) -> FloatClass {
    use std::num::FpCategory::*;
    match v.classify() {
        Zero => FloatClass::Zero,
        Subnormal => FloatClass::Subnormal,
        Normal => FloatClass::Normal,
        Infinite => FloatClass::Infinite,
        Nan => FloatClass::Nan,
    }
}

/// Validity under a target float model: finite, and either zero, normal, or
/// subnormal-with-denormal-support.
pub fn is_valid_on_target(v: f32, denorm: bool) -> bool {
    v.is_finite() && (denorm || v == 0.0 || v.abs() >= MIN_NORMAL)
}

/// Next representable value toward +inf (total-order successor on finites).
pub fn next_up(v: f32) -> f32 {
    if v.is_nan() || v == f32::INFINITY {
        return v;
    }
    let bits = v.to_bits();
    let next = if v == 0.0 {
        1 // smallest positive subnormal, regardless of zero sign
    } else if bits & 0x8000_0000 == 0 {
        bits + 1
    } else {
        bits - 1
    };
    f32::from_bits(next)
}

/// Next representable value toward -inf.
pub fn next_down(v: f32) -> f32 {
    if v.is_nan() || v == f32::NEG_INFINITY {
        return v;
    }
    if v == 0.0 {
        return f32::from_bits(0x8000_0001);
    }
    let bits = v.to_bits();
    let next = if bits & 0x8000_0000 == 0 { bits - 1 } else { bits + 1 };
    f32::from_bits(next)
}

/// `Sin` as executed by the oracle: evaluated through binary64 and rounded
/// once back to binary32.
pub fn sin32(x: f32) -> f32 {
    (x as f64).sin() as f32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_and_equality() {
        let vals = [
            f32::NEG_INFINITY,
            -1.0,
            -0.0,
            0.0,
            f32::MIN_POSITIVE / 4.0,
            1.0,
            f32::INFINITY,
            f32::NAN,
        ];
        let mut wrapped: Vec<F32> = vals.iter().copied().map(F32::from_f32).collect();
        wrapped.sort();
        assert_eq!(wrapped.last().unwrap().is_nan(), true);
        assert!(F32::from_f32(-0.0) < F32::from_f32(0.0));
        assert_eq!(F32::from_f32(f32::NAN), F32::from_f32(f32::NAN));
    }

    #[test]
    fn classification_matches_payload() {
        assert_eq!(classify(0.0), FloatClass::Zero);
        assert_eq!(classify(-8.68468736e-41), FloatClass::Subnormal);
        assert_eq!(classify(1.0), FloatClass::Normal);
        assert_eq!(classify(f32::INFINITY), FloatClass::Infinite);
        assert_eq!(classify(f32::NAN), FloatClass::Nan);
    }

    #[test]
    fn validity_depends_on_denorm_capability() {
        let sub = -8.68468736e-41_f32;
        assert!(is_valid_on_target(sub, true));
        assert!(!is_valid_on_target(sub, false));
        assert!(is_valid_on_target(0.0, false));
        assert!(is_valid_on_target(1.0, false));
        assert!(!is_valid_on_target(f32::INFINITY, true));
    }

    #[test]
    fn neighbors() {
        assert_eq!(next_up(0.0), f32::from_bits(1));
        assert_eq!(next_down(0.0), f32::from_bits(0x8000_0001));
        assert!(next_up(1.0) > 1.0);
        assert!(next_down(1.0) < 1.0);
    }
}
