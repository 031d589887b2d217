//! Arbitrary-precision real scalar backed by `dashu-float`.
//!
//! Precision is configured as a number of decimal digits, process-wide, and
//! is meant to be set once at startup (the CLI maps `--digits` /
//! `MOMENTA_DIGITS` here). Individual values may be constructed at an
//! explicit precision with [`BigReal::from_f64_with_digits`]; mixed-precision
//! arithmetic follows the wider operand.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use dashu_float::round::mode::HalfEven;
use dashu_float::{DBig, FBig};
use num_traits::{Num, One, Zero};

use crate::scalar::{PrecisionMode, Real};

type Backend = FBig<HalfEven, 2>;

/// Default decimal precision for extended-mode arithmetic.
pub const DEFAULT_PRECISION_DIGITS: u32 = 50;

static PRECISION_DIGITS: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION_DIGITS);

/// Set the process-wide extended precision in decimal digits (clamped to [16, 100000]).
pub fn set_precision_digits(digits: u32) {
    PRECISION_DIGITS.store(digits.clamp(16, 100_000), Ordering::Relaxed);
}

/// Current process-wide extended precision in decimal digits.
pub fn precision_digits() -> u32 {
    PRECISION_DIGITS.load(Ordering::Relaxed)
}

// log2(10) = 3.3219...; a few guard bits on top.
fn bits_for(digits: u32) -> usize {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as usize + 16
}

/// Arbitrary-precision real number (binary mantissa, unbounded exponent).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BigReal(Backend);

impl BigReal {
    /// Exact embedding of an f64 at the process-wide precision.
    pub fn from_f64_global(x: f64) -> Self {
        Self::from_f64_with_digits(x, precision_digits())
    }

    /// Exact embedding of an f64, carrying `digits` decimal digits of working
    /// precision for subsequent operations.
    pub fn from_f64_with_digits(x: f64, digits: u32) -> Self {
        assert!(x.is_finite(), "BigReal requires finite input, got {x}");
        let raw = Backend::try_from(x).expect("finite f64 conversion");
        BigReal(raw.with_precision(bits_for(digits)).value())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Working precision of this value, in decimal digits.
    pub fn digits(&self) -> u32 {
        (self.0.precision() as f64 / std::f64::consts::LOG2_10).floor() as u32
    }

    /// Re-round to `digits` decimal digits (widening is exact).
    pub fn with_digits(&self, digits: u32) -> Self {
        BigReal(self.0.clone().with_precision(bits_for(digits)).value())
    }

    pub fn is_negative(&self) -> bool {
        self.0 < Backend::ZERO
    }

    pub fn ln(&self) -> Self {
        BigReal(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.exp())
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({self})")
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_decimal().value())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                BigReal((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);
forward_binop!(Rem, rem);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl AddAssign for BigReal {
    fn add_assign(&mut self, rhs: BigReal) {
        self.0 += rhs.0;
    }
}
impl SubAssign for BigReal {
    fn sub_assign(&mut self, rhs: BigReal) {
        self.0 -= rhs.0;
    }
}
impl MulAssign for BigReal {
    fn mul_assign(&mut self, rhs: BigReal) {
        self.0 *= rhs.0;
    }
}
impl DivAssign for BigReal {
    fn div_assign(&mut self, rhs: BigReal) {
        let v = std::mem::replace(&mut self.0, Backend::ZERO);
        self.0 = v / rhs.0;
    }
}

impl Zero for BigReal {
    fn zero() -> Self {
        // Precision 0 means "exact" in dashu; sums adopt the other operand's precision.
        BigReal(Backend::ZERO)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigReal {
    fn one() -> Self {
        BigReal(Backend::ONE)
    }
}

impl Num for BigReal {
    type FromStrRadixErr = crate::error::Error;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(crate::error::Error::Parse(format!(
                "BigReal only parses radix 10, got {radix}"
            )));
        }
        let dec = DBig::from_str(s)
            .map_err(|e| crate::error::Error::Parse(format!("invalid decimal literal {s:?}: {e}")))?;
        let bin = dec
            .with_rounding::<HalfEven>()
            .with_base::<2>()
            .value()
            .with_precision(bits_for(precision_digits()))
            .value();
        Ok(BigReal(bin))
    }
}

impl Real for BigReal {
    fn from_f64(x: f64) -> Self {
        BigReal::from_f64_global(x)
    }

    fn to_f64(&self) -> f64 {
        BigReal::to_f64(self)
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn sqrt(&self) -> Self {
        BigReal(self.0.sqrt())
    }

    fn precision_mode() -> PrecisionMode {
        PrecisionMode::Extended(precision_digits())
    }

    fn unit_roundoff() -> f64 {
        // 10^(1 - digits); underflows to 0 beyond ~digits 310, i.e. "exact".
        10f64.powi(-(precision_digits().min(400) as i32 - 1))
    }

    fn to_bigreal(&self, digits: u32) -> BigReal {
        self.with_digits(digits.max(self.digits()))
    }

    fn from_bigreal(b: &BigReal) -> Self {
        b.with_digits(precision_digits())
    }

    fn root(&self, n: u32) -> Self {
        if self.is_zero() {
            return BigReal::zero();
        }
        assert!(!self.is_negative(), "root of negative value");
        // exp(ln(x)/n); keeps meaning even when |x| is far outside f64 range
        let ln = self.0.ln();
        let n = Backend::from(n).with_precision(self.0.precision()).value();
        BigReal((ln / n).exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_squares_back() {
        let two = BigReal::from_f64_with_digits(2.0, 60);
        let s = Real::sqrt(&two);
        let back = &s * &s;
        let err = Real::abs(&(&back - &two));
        assert!(err < BigReal::from_f64_with_digits(1e-55, 60), "err = {err}");
    }

    #[test]
    fn root_far_outside_f64_range() {
        // 2^-2000 is not representable in f64, but its 100th root is 2^-20.
        let half = BigReal::from_f64_with_digits(0.5, 60);
        let tiny = Real::powi(&half, 2000);
        assert_eq!(tiny.to_f64(), 0.0);
        let r = Real::root(&tiny, 100);
        assert!((r.to_f64() - 2f64.powi(-20)).abs() < 1e-12);
    }

    #[test]
    fn parse_decimal_string() {
        let x = <BigReal as Num>::from_str_radix("0.125", 10).unwrap();
        assert_eq!(x.to_f64(), 0.125);
        assert!(<BigReal as Num>::from_str_radix("0.1", 2).is_err());
    }

    #[test]
    fn display_is_decimal() {
        let x = BigReal::from_f64_with_digits(0.25, 30);
        assert_eq!(format!("{x}"), "0.25");
    }
}
