use serde::Serialize;

use super::gamma::{gamma, ln_gamma};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Ball `{x ∈ R^k : ‖x‖_p ≤ radius}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PNormBall<T> {
    pub k: u32,
    pub p: u32,
    pub radius: T,
}

fn check_kp(k: u32, p: u32) -> Result<()> {
    if k == 0 || p == 0 {
        return Err(Error::invalid(format!("need k >= 1 and p >= 1, got k = {k}, p = {p}")));
    }
    Ok(())
}

fn ratio<T: Real>(a: u32, b: u32) -> T {
    T::from_u32(a).unwrap() / T::from_u32(b).unwrap()
}

/// `ln` of the unit-ball volume `[2Γ(1+1/p)]^k / Γ(1+k/p)`.
pub fn ln_unit_ball_volume<T: Real>(k: u32, p: u32) -> Result<T> {
    check_kp(k, p)?;
    let two = T::lit(2.0);
    let per_axis = (two * gamma(T::one() + ratio::<T>(1, p))?).ln();
    Ok(T::from_u32(k).unwrap() * per_axis - ln_gamma(T::one() + ratio::<T>(k, p))?)
}

impl<T: Real> PNormBall<T> {
    pub fn new(k: u32, p: u32, radius: T) -> Result<Self> {
        check_kp(k, p)?;
        if !radius.is_finite() || radius < T::zero() {
            return Err(Error::invalid(format!("radius must be finite and >= 0, got {radius}")));
        }
        Ok(Self { k, p, radius })
    }

    /// Unit-ball volume, evaluated directly when it fits and via logs otherwise.
    fn unit_volume(&self) -> Result<T> {
        let g = gamma(T::one() + ratio::<T>(self.k, self.p));
        let per_axis = T::lit(2.0) * gamma(T::one() + ratio::<T>(1, self.p))?;
        match g {
            Ok(g) => Ok(per_axis.powi(self.k as i32) / g),
            Err(_) => Ok(ln_unit_ball_volume::<T>(self.k, self.p)?.exp()),
        }
    }

    pub fn volume(&self) -> Result<T> {
        Ok(self.unit_volume()? * self.radius.powi(self.k as i32))
    }

    /// `d/dR` of the volume.
    pub fn surface(&self) -> Result<T> {
        if self.radius <= T::zero() {
            return Err(Error::invalid("surface needs radius > 0"));
        }
        let k = T::from_u32(self.k).unwrap();
        Ok(k * self.unit_volume()? * self.radius.powi(self.k as i32 - 1))
    }
}

pub fn ball_volume<T: Real>(k: u32, p: u32, radius: T) -> Result<T> {
    PNormBall::new(k, p, radius)?.volume()
}

pub fn ball_surface<T: Real>(k: u32, p: u32, radius: T) -> Result<T> {
    PNormBall::new(k, p, radius)?.surface()
}

/// Radius `R` with `ball_volume(k, p, R) = 2^n`:
/// `R = 2^{n/k} · Γ(1+k/p)^{1/k} / (2Γ(1+1/p))`.
pub fn radius_for_count<T: Real>(n: u32, k: u32, p: u32) -> Result<T> {
    check_kp(k, p)?;
    let k_t = T::from_u32(k).unwrap();
    let n_over_k = ratio::<T>(n, k);
    let per_axis = T::lit(2.0) * gamma(T::one() + ratio::<T>(1, p))?;
    let two_pow = T::lit(2.0).powf(n_over_k);
    if let (Ok(g), true) = (gamma(T::one() + ratio::<T>(k, p)), two_pow.is_finite()) {
        return Ok(two_pow * g.powf(k_t.recip()) / per_axis);
    }
    let ln_g = ln_gamma(T::one() + ratio::<T>(k, p))?;
    Ok((n_over_k * T::LN_2() + ln_g / k_t - per_axis.ln()).exp())
}
