use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use super::distribution::{distribution_for, DEFAULT_TABLE_BUDGET};
use crate::combinatorics::{closed_form_s1, closed_form_s3};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::sequence::VectorSequence;

/// A value of `E‖X‖_p^p` together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "provenance", rename_all = "snake_case")]
pub enum MomentValue<T = f64> {
    /// Exact, from the per-coordinate signed-sum distributions.
    ExactDp {
        p: u32,
        #[serde(serialize_with = "crate::serde_exact::rational")]
        value: BigRational,
    },
    /// Exact, from the binomial closed forms of the extremal configuration.
    ClosedForm {
        p: u32,
        #[serde(serialize_with = "crate::serde_exact::rational")]
        value: BigRational,
    },
    MonteCarlo {
        p: T,
        mean: T,
        /// `None` for a single sample.
        stderr: Option<T>,
        samples: u64,
        seed: u64,
    },
}

impl<T: Real> MomentValue<T> {
    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            MomentValue::ExactDp { value, .. } | MomentValue::ClosedForm { value, .. } => Some(value),
            MomentValue::MonteCarlo { .. } => None,
        }
    }

    /// Point value as a float.
    pub fn approx(&self) -> T {
        match self {
            MomentValue::ExactDp { value, .. } | MomentValue::ClosedForm { value, .. } => {
                T::lit(value.to_f64().unwrap_or(f64::NAN))
            }
            MomentValue::MonteCarlo { mean, .. } => *mean,
        }
    }

    pub fn provenance(&self) -> &'static str {
        match self {
            MomentValue::ExactDp { .. } => "exact_dp",
            MomentValue::ClosedForm { .. } => "closed_form",
            MomentValue::MonteCarlo { .. } => "monte_carlo",
        }
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Exact `E‖X‖_p^p = Σ_j E|X_j|^p` for `X = Σ ε_i a_i`, `ε_i = ±1/2`.
pub fn exact_moment(seq: &VectorSequence, p: u32) -> Result<MomentValue> {
    exact_moment_with_budget(seq, p, DEFAULT_TABLE_BUDGET)
}

pub fn exact_moment_with_budget(seq: &VectorSequence, p: u32, budget: u64) -> Result<MomentValue> {
    if p == 0 {
        return Err(Error::invalid("moment order p must be >= 1"));
    }
    let per_coordinate: Vec<BigUint> = (0..seq.k())
        .into_par_iter()
        .map(|j| distribution_for(j, &seq.coordinate(j), budget).map(|d| d.abs_power_sum(p)))
        .collect::<Result<_>>()?;
    let total: BigUint = per_coordinate.into_iter().sum();
    let value = BigRational::new(total.into(), pow2(seq.n() + p as usize));
    Ok(MomentValue::ExactDp { p, value })
}

/// `E‖X‖_p^p` for the extremal configuration where all `n` vectors are the
/// all-`M` vector in `Z^k`: `k·M^p·S_p(n)/2^n`, `p ∈ {1, 2, 3}`.
pub fn extremal_moment(n: u32, k: u32, bound: u64, p: u32) -> Result<MomentValue> {
    let s = match p {
        1 => closed_form_s1(n)?,
        // Σ C(n,i)(n/2 − i)² = n·2^n/4
        2 => BigRational::new(BigInt::from(n) * pow2(n as usize), BigInt::from(4)),
        3 => closed_form_s3(n)?,
        _ => return Err(Error::invalid(format!("closed forms exist for p in 1..=3, got {p}"))),
    };
    let scale = BigInt::from(k) * BigInt::from(bound).pow(p);
    let value = s * BigRational::new(scale, pow2(n as usize));
    Ok(MomentValue::ClosedForm { p, value })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarianceCheck {
    #[serde(serialize_with = "crate::serde_exact::rational")]
    pub exact: BigRational,
    /// `¼·Σ_i ‖a_i‖₂²`
    #[serde(serialize_with = "crate::serde_exact::rational")]
    pub predicted: BigRational,
    pub holds: bool,
}

/// Checks `E‖X‖₂² = ¼·Σ‖a_i‖₂²` exactly.
pub fn variance_identity_check(seq: &VectorSequence) -> Result<VarianceCheck> {
    let exact = exact_moment(seq, 2)?.exact().cloned().expect("exact path");
    let squares: BigUint = seq
        .vectors()
        .iter()
        .flatten()
        .map(|&c| BigUint::from(c) * c)
        .sum();
    let predicted = BigRational::new(squares.into(), BigInt::from(4));
    let holds = exact == predicted;
    Ok(VarianceCheck { exact, predicted, holds })
}
