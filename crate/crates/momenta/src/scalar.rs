//! Scalar abstraction: every numeric kernel in this crate is generic over a
//! real scalar type implementing [`Real`].
//!
//! Two families are provided: hardware floats (`f64`, `f32`) and the
//! arbitrary-precision [`crate::bigreal::BigReal`]. Complex values are
//! `num_complex::Complex<R>` throughout.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use num_complex::Complex;
use num_traits::Num;

use crate::bigreal::BigReal;

/// Arithmetic mode of a scalar type, recorded in artifact headers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecisionMode {
    /// IEEE 754 binary64 (or binary32 for `f32`).
    Double,
    /// Software floating point with the given number of decimal digits.
    Extended(u32),
}

impl Display for PrecisionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrecisionMode::Double => write!(f, "double"),
            PrecisionMode::Extended(d) => write!(f, "extended({d})"),
        }
    }
}

impl PrecisionMode {
    pub fn parse(s: &str) -> Option<Self> {
        if s == "double" {
            return Some(PrecisionMode::Double);
        }
        let inner = s.strip_prefix("extended(")?.strip_suffix(')')?;
        inner.parse().ok().map(PrecisionMode::Extended)
    }
}

/// Real scalar the numeric kernels are generic over.
///
/// `Num` brings the ring operations plus `zero`/`one`; the extra methods are
/// the small analytic surface the algorithms actually need (absolute value,
/// square root, conversions). Everything here must be deterministic: no
/// operation may depend on thread count or global mutable state during a run.
pub trait Real:
    Num
    + Clone
    + PartialOrd
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;

    /// Arithmetic mode this type runs in.
    fn precision_mode() -> PrecisionMode;

    /// Upper bound on the relative error of a single arithmetic operation.
    fn unit_roundoff() -> f64;

    /// Exact embedding into `BigReal` at the given decimal precision.
    fn to_bigreal(&self, digits: u32) -> BigReal;

    /// Rounding back from `BigReal` into this type.
    fn from_bigreal(b: &BigReal) -> Self;

    fn from_usize(n: usize) -> Self {
        // Exact for n < 2^53, which covers every index and exponent we use.
        Self::from_f64(n as f64)
    }

    /// Nonnegative integer power by binary exponentiation.
    fn powi(&self, n: u64) -> Self {
        powi_generic(self.clone(), n)
    }

    /// `self^(1/n)` for the root test; 0 maps to 0.
    fn root(&self, n: u32) -> Self;

    fn max_with(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_with(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

/// Binary exponentiation over any multiplicative monoid.
fn powi_generic<T: Clone + num_traits::One + std::ops::Mul<Output = T>>(mut base: T, mut n: u64) -> T {
    if n == 0 {
        return T::one();
    }
    let mut acc = T::one();
    while n > 1 {
        if n & 1 == 1 {
            acc = acc * base.clone();
            n -= 1;
        }
        base = base.clone() * base;
        n /= 2;
    }
    acc * base
}

impl Real for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn precision_mode() -> PrecisionMode {
        PrecisionMode::Double
    }
    fn unit_roundoff() -> f64 {
        f64::EPSILON / 2.0
    }
    fn to_bigreal(&self, digits: u32) -> BigReal {
        BigReal::from_f64_with_digits(*self, digits)
    }
    fn from_bigreal(b: &BigReal) -> Self {
        b.to_f64()
    }
    fn root(&self, n: u32) -> Self {
        if *self == 0.0 {
            0.0
        } else {
            self.powf(1.0 / f64::from(n))
        }
    }
}

impl Real for f32 {
    fn from_f64(x: f64) -> Self {
        x as f32
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
    fn abs(&self) -> Self {
        f32::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f32::sqrt(*self)
    }
    fn precision_mode() -> PrecisionMode {
        PrecisionMode::Double
    }
    fn unit_roundoff() -> f64 {
        f64::from(f32::EPSILON) / 2.0
    }
    fn to_bigreal(&self, digits: u32) -> BigReal {
        BigReal::from_f64_with_digits(f64::from(*self), digits)
    }
    fn from_bigreal(b: &BigReal) -> Self {
        b.to_f64() as f32
    }
    fn root(&self, n: u32) -> Self {
        if *self == 0.0 {
            0.0
        } else {
            self.powf(1.0 / n as f32)
        }
    }
}

/// |z| computed as sqrt(re^2 + im^2).
pub fn cabs<R: Real>(z: &Complex<R>) -> R {
    z.norm_sqr().sqrt()
}

/// z^n by binary exponentiation, O(log n) complex multiplications.
pub fn cpowi<R: Real>(z: &Complex<R>, n: u64) -> Complex<R> {
    powi_generic(z.clone(), n)
}

/// |z|^q via (re^2 + im^2)^(q div 2), with one square root only for odd q.
pub fn cabs_powi<R: Real>(z: &Complex<R>, q: u64) -> R {
    let nsq = z.norm_sqr();
    let even = nsq.powi(q / 2);
    if q % 2 == 1 {
        even * nsq.sqrt()
    } else {
        even
    }
}

/// Complex value from f64 parts, embedded exactly.
pub fn cfrom<R: Real>(re: f64, im: f64) -> Complex<R> {
    Complex::new(R::from_f64(re), R::from_f64(im))
}

/// Round a complex value to f64 parts.
pub fn cto_f64<R: Real>(z: &Complex<R>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// Exact embedding of f64 complex parts into any scalar.
pub fn clift<R: Real>(z: &Complex<f64>) -> Complex<R> {
    cfrom(z.re, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_matches_naive() {
        let z = Complex::new(0.3_f64, -0.4);
        let mut naive = Complex::new(1.0, 0.0);
        for n in 0..=20u64 {
            let fast = cpowi(&z, n);
            assert!((fast - naive).norm() <= 1e-14 * naive.norm().max(1.0), "n = {n}");
            naive *= z;
        }
    }

    #[test]
    fn abs_powi_odd_and_even() {
        let z = Complex::new(3.0_f64, 4.0); // |z| = 5
        assert!((cabs_powi(&z, 2) - 25.0).abs() < 1e-12);
        assert!((cabs_powi(&z, 3) - 125.0).abs() < 1e-10);
        assert_eq!(cabs_powi(&z, 0), 1.0);
    }

    #[test]
    fn root_of_zero_is_zero() {
        assert_eq!(Real::root(&0.0_f64, 7), 0.0);
        assert!((Real::root(&8.0_f64, 3) - 2.0).abs() < 1e-15);
    }
}
