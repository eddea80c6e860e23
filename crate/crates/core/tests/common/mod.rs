//! Oracles shared by the integration tests. None of these call into the code
//! paths they are used to check.

#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use sumbridge::sequence::{verify_distinct_by_sorting, VectorSequence};
use sumbridge::{ln_bigrational, ln_biguint, Method};

const LN_PI: f64 = 1.144729885849400174143427;
const LN_GAMMA_ONE_THIRD: f64 = 0.985420646927767069187174;
const LN_GAMMA_TWO_THIRDS: f64 = 0.3031502751475235686758628;

/// `ln Γ(num/den)` for `den ∈ {1, 2, 3}`: the Gamma value is reduced exactly to
/// `Γ(r/den)·Π(j + r/den)` with the product kept as a rational.
pub fn ln_gamma_rational(num: u64, den: u64) -> f64 {
    assert!(num > 0 && [1, 2, 3].contains(&den));
    if den == 1 || num % den == 0 {
        let m = num / den;
        let fact = (1..m).fold(BigUint::one(), |acc, j| acc * j);
        return ln_biguint(&fact);
    }
    let (m, r) = (num / den, num % den);
    let base = match (den, r) {
        (2, 1) => 0.5 * LN_PI,
        (3, 1) => LN_GAMMA_ONE_THIRD,
        (3, 2) => LN_GAMMA_TWO_THIRDS,
        _ => unreachable!(),
    };
    let num_prod = (0..m).fold(BigInt::one(), |acc, j| acc * BigInt::from(den * j + r));
    let den_prod = BigInt::from(den).pow(m as u32);
    base + ln_bigrational(&BigRational::new(num_prod, den_prod))
}

/// Natural log of each coefficient, evaluated through [`ln_gamma_rational`].
pub fn ln_coefficient(method: Method, k: u64) -> f64 {
    let kf = k as f64;
    match method {
        Method::FirstMoment => {
            0.5 * (LN_PI - std::f64::consts::LN_2) + ln_gamma_rational(k + 1, 1) / kf - (kf + 1.0).ln()
        }
        Method::ThirdMoment => {
            let ln_gamma_four_thirds = LN_GAMMA_ONE_THIRD - 3f64.ln();
            (LN_PI - 8f64.ln()) / 6.0 + ln_gamma_rational(k + 3, 3) / kf
                - (kf + 3.0).ln() / 3.0
                - ln_gamma_four_thirds
        }
        Method::Variance => {
            0.5 * (4f64.ln() - LN_PI - (kf + 2.0).ln()) + ln_gamma_rational(k + 2, 2) / kf
        }
    }
}

/// Argmax with ties toward the lower moment order.
pub fn audited_argmax(k: u64) -> Method {
    let mut best = Method::FirstMoment;
    let mut val = ln_coefficient(best, k);
    for m in [Method::Variance, Method::ThirdMoment] {
        let v = ln_coefficient(m, k);
        if v > val {
            best = m;
            val = v;
        }
    }
    best
}

/// Smallest `M` for which some `n`-subset of the nonzero vectors of
/// `[0, M]^k` has distinct subset sums. Plain enumeration, no pruning.
pub fn brute_force_min_m(n: usize, k: usize) -> u64 {
    (1..)
        .find(|&bound| {
            let cands: Vec<Vec<u64>> = (0..k)
                .map(|_| 0..=bound)
                .multi_cartesian_product()
                .filter(|v| v.iter().any(|&c| c != 0))
                .collect();
            cands.into_iter().combinations(n).any(|vs| {
                let seq = VectorSequence::new(k, bound, vs).unwrap();
                verify_distinct_by_sorting(&seq).unwrap().is_distinct()
            })
        })
        .unwrap()
}
