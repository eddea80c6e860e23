//! Lower bounds on `M` from the three statistical bridges.
//!
//! Each method gives `M ≥ (1+o(1))·c(k)·2^{n/k}/√n`. The first- and
//! third-moment methods also have a finite-`n` form obtained by keeping the
//! exact binomial sums instead of their asymptotics; that form still inherits
//! the `(1+o(1))` of the lattice side and is reported as heuristic.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::combinatorics::{binomial, scaled_abs_moment_sum};
use crate::error::{Error, Result};
use crate::geometry::{gamma, ln_gamma, radius_for_count};
use crate::scalar::Real;

/// Largest dimension the crossover table accepts.
pub const CROSSOVER_K_MAX: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FirstMoment,
    ThirdMoment,
    Variance,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::FirstMoment, Method::ThirdMoment, Method::Variance];

    pub fn token(self) -> &'static str {
        match self {
            Method::FirstMoment => "first_moment",
            Method::ThirdMoment => "third_moment",
            Method::Variance => "variance",
        }
    }

    /// Order `p` of the bridged moment `E‖X‖_p^p`.
    pub fn moment_order(self) -> u32 {
        match self {
            Method::FirstMoment => 1,
            Method::Variance => 2,
            Method::ThirdMoment => 3,
        }
    }

    /// Method the published dimension split assigns to `k`
    /// (`k ≤ 4` first moment, `4 < k ≤ 6` third moment, `k > 6` variance).
    pub fn stated_branch(k: u32) -> Method {
        match k {
            0..=4 => Method::FirstMoment,
            5..=6 => Method::ThirdMoment,
            _ => Method::Variance,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.token() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("dimension k must be >= 1"));
    }
    Ok(())
}

fn t<T: Real>(x: u32) -> T {
    T::from_u32(x).unwrap()
}

/// `√(π/2)·(k!)^{1/k}/(k+1)`.
pub fn coeff_first<T: Real>(k: u32) -> Result<T> {
    check_k(k)?;
    let kt = t::<T>(k);
    let root_fact = (ln_gamma(kt + T::one())? / kt).exp();
    Ok(T::FRAC_PI_2().sqrt() * root_fact / (kt + T::one()))
}

/// `(π/8)^{1/6}·Γ((k+3)/3)^{1/k} / ((k+3)^{1/3}·Γ(4/3))`.
pub fn coeff_third<T: Real>(k: u32) -> Result<T> {
    check_k(k)?;
    let kt = t::<T>(k);
    let three = t::<T>(3);
    let root_gamma = (ln_gamma((kt + three) / three)? / kt).exp();
    let lead = (T::PI() / t::<T>(8)).powf(T::one() / t::<T>(6));
    Ok(lead * root_gamma / ((kt + three).cbrt() * gamma(t::<T>(4) / three)?))
}

/// `√(4/(π(k+2)))·Γ(k/2+1)^{1/k}`.
pub fn coeff_variance<T: Real>(k: u32) -> Result<T> {
    check_k(k)?;
    let kt = t::<T>(k);
    let two = t::<T>(2);
    let root_gamma = (ln_gamma(kt / two + T::one())? / kt).exp();
    Ok((t::<T>(4) / (T::PI() * (kt + two))).sqrt() * root_gamma)
}

pub fn coefficient<T: Real>(method: Method, k: u32) -> Result<T> {
    match method {
        Method::FirstMoment => coeff_first(k),
        Method::ThirdMoment => coeff_third(k),
        Method::Variance => coeff_variance(k),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub method: Method,
    pub k: u32,
    pub n: Option<u32>,
    /// `c(k)` in `M ≥ (1+o(1))·c(k)·2^{n/k}/√n`.
    pub coefficient: T,
    /// `c(k)·2^{n/k}/√n`, without the `(1+o(1))` factor.
    pub asymptotic_bound: Option<T>,
    /// Finite-`n` form with exact binomial sums. Heuristic, not a theorem.
    pub finite_bound: Option<T>,
}

impl<T: Real> BoundReport<T> {
    pub fn coefficient_only(method: Method, k: u32) -> Result<Self> {
        Ok(Self {
            method,
            k,
            n: None,
            coefficient: coefficient(method, k)?,
            asymptotic_bound: None,
            finite_bound: None,
        })
    }
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// `M ≥ R·2^n / ((k+1)·n·C(n−1, ⌊(n−1)/2⌋))` with `R = radius_for_count(n, k, 1)`.
pub fn finite_first<T: Real>(n: u32, k: u32) -> Result<T> {
    let r: T = radius_for_count(n, k, 1)?;
    let n64 = u64::from(n);
    let central: BigUint = binomial(n64 - 1, (n64 - 1) / 2) * n64;
    let q = BigRational::new(pow2(n), BigInt::from(central));
    Ok(r * T::lit(q.to_f64().unwrap_or(f64::NAN)) / t::<T>(k + 1))
}

/// `M ≥ R·(2^{n+3} / ((k+3)·T_3(n)))^{1/3}` with `R = radius_for_count(n, k, 3)`.
pub fn finite_third<T: Real>(n: u32, k: u32) -> Result<T> {
    let r: T = radius_for_count(n, k, 3)?;
    let t3 = scaled_abs_moment_sum(n, 3).value;
    let q = BigRational::new(pow2(n + 3), BigInt::from(t3) * BigInt::from(k + 3));
    Ok(r * T::lit(q.to_f64().unwrap_or(f64::NAN)).cbrt())
}

/// Lower bound on `M` for sequences of length `n` in `Z^k`.
pub fn lower_bound_m<T: Real>(n: u32, k: u32, method: Method) -> Result<BoundReport<T>> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::invalid("sequence length n must be >= 1"));
    }
    let c: T = coefficient(method, k)?;
    let growth = T::lit(2.0).powf(t::<T>(n) / t::<T>(k)) / t::<T>(n).sqrt();
    let finite_bound = match method {
        Method::FirstMoment => Some(finite_first(n, k)?),
        Method::ThirdMoment => Some(finite_third(n, k)?),
        Method::Variance => None,
    };
    Ok(BoundReport {
        method,
        k,
        n: Some(n),
        coefficient: c,
        asymptotic_bound: Some(c * growth),
        finite_bound,
    })
}

/// The three coefficients at one `k` and the method with the largest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossoverRow<T> {
    pub k: u32,
    pub c_first: T,
    pub c_third: T,
    pub c_variance: T,
    pub argmax: Method,
}

impl<T: Real> CrossoverRow<T> {
    pub fn coefficient(&self, method: Method) -> T {
        match method {
            Method::FirstMoment => self.c_first,
            Method::ThirdMoment => self.c_third,
            Method::Variance => self.c_variance,
        }
    }

    pub fn stated_branch(&self) -> Method {
        Method::stated_branch(self.k)
    }

    pub fn agrees_with_stated(&self) -> bool {
        self.argmax == self.stated_branch()
    }
}

/// Computes all three coefficients and their argmax.
///
/// Ties go to the lower moment order (first, then variance, then third).
pub fn best_method<T: Real>(k: u32) -> Result<CrossoverRow<T>> {
    let c_first = coeff_first(k)?;
    let c_third = coeff_third(k)?;
    let c_variance = coeff_variance(k)?;
    let mut argmax = Method::FirstMoment;
    let mut best = c_first;
    for (m, c) in [(Method::Variance, c_variance), (Method::ThirdMoment, c_third)] {
        if c > best {
            best = c;
            argmax = m;
        }
    }
    Ok(CrossoverRow { k, c_first, c_third, c_variance, argmax })
}

pub fn crossover_table<T: Real>(k_min: u32, k_max: u32) -> Result<Vec<CrossoverRow<T>>> {
    if !(1 <= k_min && k_min <= k_max && k_max <= CROSSOVER_K_MAX) {
        return Err(Error::invalid(format!(
            "need 1 <= k_min <= k_max <= {CROSSOVER_K_MAX}, got {k_min}..{k_max}"
        )));
    }
    (k_min..=k_max).map(best_method).collect()
}

/// `x` with `digits` significant digits in plain decimal notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub const CROSSOVER_CSV_HEADER: &str = "k,c_first,c_third,c_variance,argmax";

pub fn write_crossover_csv<T: Real, W: Write>(rows: &[CrossoverRow<T>], mut out: W) -> io::Result<()> {
    writeln!(out, "{CROSSOVER_CSV_HEADER}")?;
    for row in rows {
        let f = |x: T| format_significant(x.to_f64().unwrap_or(f64::NAN), 9);
        writeln!(
            out,
            "{},{},{},{},{}",
            row.k,
            f(row.c_first),
            f(row.c_third),
            f(row.c_variance),
            row.argmax
        )?;
    }
    Ok(())
}
