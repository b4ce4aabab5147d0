//! Dual-mode scalar: exact big rationals or `f64`.
//!
//! Arithmetic between two exact values stays exact; as soon as a real value
//! takes part the result is real. Comparisons between exact values are exact,
//! comparisons involving a real go through `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute tolerance used for boundary-sensitive comparisons in real mode.
pub const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug)]
pub enum Number {
    Exact(BigRational),
    Real(f64),
}

impl Number {
    /// Exact `numer / denom`. Panics when `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Number::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn real(x: f64) -> Self {
        Number::Real(x)
    }

    pub fn zero() -> Self {
        Number::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Number::Exact(BigRational::one())
    }

    pub fn half() -> Self {
        Number::ratio(1, 2)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Number::Real(x) => *x,
        }
    }

    /// Same value, forced into real mode.
    pub fn to_real(&self) -> Self {
        Number::Real(self.to_f64())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Real(_) => None,
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Number::Exact(r) => Number::Exact(r.abs()),
            Number::Real(x) => Number::Real(x.abs()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Number::Exact(r) => r.is_zero(),
            Number::Real(x) => *x == 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Number::Exact(_) => true,
            Number::Real(x) => x.is_finite(),
        }
    }

    /// Larger of the two; ties keep `self`.
    pub fn max(self, other: Number) -> Number {
        if other.value_cmp(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Number) -> Number {
        if other.value_cmp(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// Total order on values. NaN compares equal to everything.
    pub fn value_cmp(&self, other: &Number) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    /// Exact when both sides are exact; otherwise differences within
    /// [`TOLERANCE`] compare equal.
    pub fn cmp_tolerant(&self, other: &Number) -> Ordering {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a.cmp(b),
            _ => {
                let diff = self.to_f64() - other.to_f64();
                if diff.abs() <= TOLERANCE {
                    Ordering::Equal
                } else if diff < 0.0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// `self >= other`, with tolerance in real mode.
    pub fn ge_tolerant(&self, other: &Number) -> bool {
        self.cmp_tolerant(other) != Ordering::Less
    }

    /// `self > other` by more than the tolerance in real mode.
    pub fn gt_tolerant(&self, other: &Number) -> bool {
        self.cmp_tolerant(other) == Ordering::Greater
    }

    /// Re-expresses `self` in the mode of `like` when `like` is real.
    pub fn in_mode_of(self, like: &Number) -> Number {
        match like {
            Number::Real(_) => self.to_real(),
            Number::Exact(_) => self,
        }
    }
}

impl From<f64> for Number {
    fn from(x: f64) -> Self {
        Number::Real(x)
    }
}

impl From<i64> for Number {
    fn from(n: i64) -> Self {
        Number::Exact(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Number {
    fn from(r: BigRational) -> Self {
        Number::Exact(r)
    }
}

impl PartialEq for Number {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                match (self, rhs) {
                    (Number::Exact(a), Number::Exact(b)) => Number::Exact(a $op b),
                    _ => Number::Real(self.to_f64() $op rhs.to_f64()),
                }
            }
        }

        impl $trait<Number> for Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Number> for Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                (&self).$method(rhs)
            }
        }

        impl $trait<Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                self.$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);
binary_op!(Mul, mul, *);
// Exact division by zero panics, as BigRational does.
binary_op!(Div, div, /);

impl Neg for &Number {
    type Output = Number;
    fn neg(self) -> Number {
        match self {
            Number::Exact(r) => Number::Exact(-r),
            Number::Real(x) => Number::Real(-x),
        }
    }
}

impl Neg for Number {
    type Output = Number;
    fn neg(self) -> Number {
        -&self
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Number::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Number::Real(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Number {
    type Err = Error;

    /// `"p/q"` and plain integers parse exactly; decimal literals parse as reals.
    fn from_str(s: &str) -> Result<Self> {
        let input = s.trim();
        let fail = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if input.is_empty() {
            return Err(fail("empty input"));
        }
        if let Some((numer, denom)) = input.split_once('/') {
            let numer: BigInt = numer
                .trim()
                .parse()
                .map_err(|_| fail("numerator is not an integer"))?;
            let denom: BigInt = denom
                .trim()
                .parse()
                .map_err(|_| fail("denominator is not an integer"))?;
            if denom.is_zero() {
                return Err(fail("zero denominator"));
            }
            return Ok(Number::Exact(BigRational::new(numer, denom)));
        }
        if let Ok(n) = input.parse::<BigInt>() {
            return Ok(Number::Exact(BigRational::from_integer(n)));
        }
        match input.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Number::Real(x)),
            Ok(_) => Err(fail("not a finite number")),
            Err(_) => Err(fail("expected p/q or a decimal literal")),
        }
    }
}

impl Serialize for Number {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Number::Exact(_) => serializer.serialize_str(&self.to_string()),
            Number::Real(x) => serializer.serialize_f64(*x),
        }
    }
}

struct NumberVisitor;

impl<'de> Visitor<'de> for NumberVisitor {
    type Value = Number;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a number or a \"p/q\" string")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Number, E> {
        Ok(Number::Real(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Number, E> {
        Ok(Number::Real(v as f64))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Number, E> {
        Ok(Number::Real(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Number, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(NumberVisitor)
    }
}
