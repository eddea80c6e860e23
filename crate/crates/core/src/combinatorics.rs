//! Exact binomial coefficients and absolute central moment sums.
//!
//! The sums are kept scaled so every term is an integer:
//! `T_p(n) = Σ_i C(n,i)·|n − 2i|^p = 2^p · S_p(n)` where
//! `S_p(n) = Σ_i C(n,i)·|n/2 − i|^p`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `C(n, i)`, zero when `i > n`.
pub fn binomial(n: u64, i: u64) -> BigUint {
    if i > n {
        return BigUint::zero();
    }
    let i = i.min(n - i);
    let mut acc = BigUint::one();
    for j in 1..=i {
        acc *= n - i + j;
        acc /= j;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, j| acc * j)
}

/// `T_p(n)` together with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledMomentSum {
    pub n: u32,
    pub p: u32,
    #[serde(serialize_with = "crate::serde_exact::biguint")]
    pub value: BigUint,
}

impl ScaledMomentSum {
    /// The unscaled sum `S_p(n) = T_p(n) / 2^p`.
    pub fn unscaled(&self) -> BigRational {
        let den = BigInt::from(BigUint::one() << self.p as usize);
        BigRational::new(BigInt::from(self.value.clone()), den)
    }
}

/// Direct summation of `Σ_{i=0}^{n} C(n,i)·|n − 2i|^p`.
pub fn scaled_abs_moment_sum(n: u32, p: u32) -> ScaledMomentSum {
    let n64 = u64::from(n);
    let mut coeff = BigUint::one();
    let mut value = BigUint::zero();
    for i in 0..=n64 {
        let dist = n64.abs_diff(2 * i);
        if dist != 0 || p == 0 {
            value += &coeff * BigUint::from(dist).pow(p);
        }
        // C(n, i+1) = C(n, i)·(n − i)/(i + 1)
        coeff = coeff * (n64 - i) / (i + 1);
    }
    ScaledMomentSum { n, p, value }
}

/// `S_1(n) = n·C(n−1, ⌊(n−1)/2⌋)`.
pub fn closed_form_s1(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::invalid("closed form S_1 needs n >= 1"));
    }
    let n = u64::from(n);
    let v = binomial(n - 1, (n - 1) / 2) * n;
    Ok(BigRational::from_integer(v.into()))
}

/// `S_3(n)`: `n!/((n/2−1)!)²` for even `n`, `n!·(2n−1)/(4·((n−1)/2)!²)` for odd `n`.
pub fn closed_form_s3(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::invalid("closed form S_3 needs n >= 1"));
    }
    let n = u64::from(n);
    let nf = BigInt::from(factorial(n));
    if n % 2 == 0 {
        let h = BigInt::from(factorial(n / 2 - 1));
        Ok(BigRational::new(nf, &h * &h))
    } else {
        let h = BigInt::from(factorial((n - 1) / 2));
        Ok(BigRational::new(nf * BigInt::from(2 * n - 1), BigInt::from(4) * &h * &h))
    }
}

/// Even-branch value of `S_3` at `n` rounded up to the next even integer.
///
/// Majorizes `S_3(n)` for every `n ≥ 1`; this is the quantity the third-moment
/// upper bound is finally stated with.
pub fn s3_even_majorant(n: u32) -> Result<BigRational> {
    closed_form_s3(n + n % 2)
}

/// `g(n) = S_1(n)/2^n = E|Σ ε_i|` for `n` signs `ε_i = ±1/2`.
pub fn first_moment_ratio(n: u32) -> Result<BigRational> {
    let s1 = closed_form_s1(n)?;
    Ok(s1 / BigRational::from_integer(BigInt::one() << n as usize))
}
