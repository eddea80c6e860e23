//! Scalar abstraction for the floating-point parts of the crate.
//!
//! Geometry, Gamma evaluation and bound coefficients are written once against
//! [`Real`] and instantiated for `f32` and `f64`. Exact quantities (binomial
//! sums, moments, lattice power sums) never go through this trait; they use
//! `BigUint`/`BigRational` directly.

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).unwrap_or_else(Self::infinity)
    }

    /// Natural log of an exact integer. Works far beyond the `f64` range.
    fn ln_biguint(x: &BigUint) -> Self {
        Self::lit(ln_biguint(x))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `ln(x)` for an arbitrary-size positive integer, accurate to ~1 ulp of `f64`.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(x)` for a positive exact rational.
pub fn ln_bigrational(x: &BigRational) -> f64 {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

/// Exact rational rendered as `"numerator/denominator"` (or a bare integer).
pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Nearest scalar to an exact rational.
pub fn rational_to_real<T: Real>(x: &BigRational) -> T {
    T::lit(x.to_f64().unwrap_or(f64::NAN))
}
