//! Gamma function for the ball-volume formulas.
//!
//! Integer and half-integer arguments are evaluated as exact products
//! (factorials and multiples of √π); everything else goes through a
//! Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.

use crate::error::{Error, Result};
use crate::scalar::Real;

pub const GAMMA_ARG_MIN: f64 = 0.05;
pub const GAMMA_ARG_MAX: f64 = 500.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

enum Special {
    /// `x = m`, `m ≥ 1`
    Integer(u32),
    /// `x = m + 1/2`, `m ≥ 0`
    HalfInteger(u32),
    General,
}

fn classify<T: Real>(x: T) -> Special {
    let twice = x + x;
    if twice != twice.round() {
        return Special::General;
    }
    let m = x.floor().to_u32().unwrap_or(0);
    if x == x.round() {
        Special::Integer(m)
    } else {
        Special::HalfInteger(m)
    }
}

fn check_domain<T: Real>(x: T) -> Result<()> {
    let xf = x.to_f64().unwrap_or(f64::NAN);
    if !(GAMMA_ARG_MIN..=GAMMA_ARG_MAX).contains(&xf) {
        return Err(Error::invalid(format!(
            "gamma argument {xf} outside [{GAMMA_ARG_MIN}, {GAMMA_ARG_MAX}]"
        )));
    }
    Ok(())
}

/// Lanczos sum `A(z)` for `Γ(z + 1)`.
fn lanczos_sum<T: Real>(z: T) -> T {
    LANCZOS[1..]
        .iter()
        .enumerate()
        .fold(T::lit(LANCZOS[0]), |acc, (i, &c)| acc + T::lit(c) / (z + T::from_usize_lossy(i + 1)))
}

fn lanczos_gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return pi / ((pi * x).sin() * lanczos_gamma(T::one() - x));
    }
    let z = x - T::one();
    let t = z + T::lit(LANCZOS_G) + half;
    // t^{z+1/2} split in two so the intermediate does not overflow near the top of the range
    let root = t.powf((z + half) * half);
    (T::PI() + T::PI()).sqrt() * root * (root * (-t).exp()) * lanczos_sum(z)
}

fn lanczos_ln_gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return (pi / (pi * x).sin()).ln() - lanczos_ln_gamma(T::one() - x);
    }
    let z = x - T::one();
    let t = z + T::lit(LANCZOS_G) + half;
    half * (T::PI() + T::PI()).ln() + (z + half) * t.ln() - t + lanczos_sum(z).ln()
}

/// `Γ(x)` for `x ∈ [0.05, 500]`.
///
/// Fails when the result is not representable in `T` (above ~171.6 for `f64`);
/// [`ln_gamma`] covers the whole domain.
pub fn gamma<T: Real>(x: T) -> Result<T> {
    check_domain(x)?;
    let value = match classify(x) {
        Special::Integer(m) => (2..m).fold(T::one(), |acc, j| acc * T::from_u32(j).unwrap()),
        Special::HalfInteger(m) => (0..m).fold(T::PI().sqrt(), |acc, j| {
            acc * (T::from_u32(j).unwrap() + T::lit(0.5))
        }),
        Special::General => lanczos_gamma(x),
    };
    if !value.is_finite() {
        return Err(Error::invalid(format!(
            "gamma({x}) overflows the scalar type; use ln_gamma"
        )));
    }
    Ok(value)
}

/// `ln Γ(x)` for `x ∈ [0.05, 500]`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    check_domain(x)?;
    Ok(match classify(x) {
        Special::Integer(m) => (2..m).fold(T::zero(), |acc, j| acc + T::from_u32(j).unwrap().ln()),
        Special::HalfInteger(m) => (0..m).fold(T::PI().sqrt().ln(), |acc, j| {
            acc + (T::from_u32(j).unwrap() + T::lit(0.5)).ln()
        }),
        Special::General => lanczos_ln_gamma(x),
    })
}
