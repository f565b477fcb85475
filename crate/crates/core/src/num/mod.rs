//! Shared numeric foundation: working-precision context, complex arithmetic
//! over multiprecision floats, small dense matrices, and polynomial helpers.

mod cplx;
mod mat;
mod poly;
mod ratio;

pub use cplx::Cplx;
pub use mat::CMat;
pub use poly::{CPoly, RatPoly};
pub use ratio::{rat_from_decimal, rat_reconstruct};

use num_bigint::BigInt;
use num_rational::BigRational;
use rug::float::Constant;
use rug::Float;

const LOG2_10: f64 = 3.321928094887362;

/// Working-precision context. All numeric routines derive their float
/// precision from this; `digits` is the requested decimal accuracy and
/// `bits` carries an internal guard on top of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ctx {
    pub bits: u32,
}

impl Ctx {
    /// Context for `digits` decimal digits plus `guard` decimal guard digits.
    pub fn new(digits: u32, guard: u32) -> Self {
        let bits = ((digits + guard) as f64 * LOG2_10).ceil() as u32 + 8;
        Ctx { bits: bits.max(64) }
    }

    /// Default guard of 25 digits.
    pub fn from_digits(digits: u32) -> Self {
        Ctx::new(digits, 25)
    }

    pub fn digits(&self) -> u32 {
        (self.bits as f64 / LOG2_10).floor() as u32
    }

    /// Widen the context by `extra` decimal digits.
    pub fn widen(&self, extra: u32) -> Self {
        Ctx {
            bits: self.bits + (extra as f64 * LOG2_10).ceil() as u32,
        }
    }

    pub fn real(&self, v: f64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits)
    }

    pub fn one(&self) -> Float {
        Float::with_val(self.bits, 1)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn from_i64(&self, v: i64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn from_bigint(&self, v: &BigInt) -> Float {
        // Digit strings keep this exact; the integers involved are small
        // enough that the quadratic parse cost never matters.
        let f = Float::parse(v.to_string()).expect("bigint parse");
        Float::with_val(self.bits, f)
    }

    pub fn from_rational(&self, v: &BigRational) -> Float {
        let n = self.from_bigint(v.numer());
        let d = self.from_bigint(v.denom());
        n / d
    }

    /// Parse a decimal string at context precision.
    pub fn parse(&self, s: &str) -> Option<Float> {
        Float::parse(s.trim()).ok().map(|p| Float::with_val(self.bits, p))
    }

    /// 10^(-k) at context precision.
    pub fn pow10(&self, k: i32) -> Float {
        Float::with_val(self.bits, 10).pow(k)
    }
}

use rug::ops::Pow;

/// Round a float to the nearest `BigInt`.
pub fn to_bigint(x: &Float) -> BigInt {
    let r = x.clone().round();
    // Render without exponent: integers of any size survive the round trip.
    let s = r.to_integer().map(|i| i.to_string()).unwrap_or_else(|| "0".into());
    s.parse().unwrap()
}

/// |x| < 10^-digits, roughly: magnitude check against a decimal threshold.
pub fn below_tol(x: &Float, digits: u32) -> bool {
    if x.is_zero() {
        return true;
    }
    match x.get_exp() {
        Some(e) => (e as f64) < -(digits as f64 * LOG2_10),
        None => true,
    }
}

/// Decimal-digit agreement between two values: floor(-log10 |a-b|), clamped
/// to the context resolution. Returns a large number when equal to precision.
pub fn agree_digits(a: &Float, b: &Float) -> i64 {
    let d = Float::with_val(a.prec().max(b.prec()), a - b);
    if d.is_zero() {
        return i64::MAX / 2;
    }
    let mag = d.abs();
    let e = mag.get_exp().unwrap_or(0);
    (-(e as f64) / LOG2_10).floor() as i64
}
