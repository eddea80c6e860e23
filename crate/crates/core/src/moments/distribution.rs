use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the value range (dense) or support size (sparse) of one table.
pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 22;

/// Distribution of `Σ_i ε'_i·a_i` over all `2^n` sign patterns `ε' ∈ {−1, +1}^n`.
///
/// The bridged variable uses signs `±1/2`, i.e. `X_j = (Σ ε'_i a_i)/2`; the
/// halving happens when moments are taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedSumDistribution {
    pub coordinate: usize,
    pub n: usize,
    /// value → number of sign patterns producing it
    pub support: BTreeMap<i64, u128>,
}

impl SignedSumDistribution {
    pub fn total(&self) -> u128 {
        self.support.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.support
            .iter()
            .all(|(&v, c)| self.support.get(&-v) == Some(c))
    }

    /// `Σ_v count(v)·|v|^p`; dividing by `2^{n+p}` gives `E|X_j|^p`.
    pub fn abs_power_sum(&self, p: u32) -> BigUint {
        self.support.iter().fold(BigUint::zero(), |acc, (&v, &c)| {
            acc + BigUint::from(c) * BigUint::from(v.unsigned_abs()).pow(p)
        })
    }
}

fn dense(values: &[u64], total: i64) -> BTreeMap<i64, u128> {
    let width = (2 * total + 1) as usize;
    let mut cur = vec![0u128; width];
    let mut next = vec![0u128; width];
    cur[total as usize] = 1;
    for &a in values {
        let a = a as usize;
        next.iter_mut().for_each(|c| *c = 0);
        for (i, &c) in cur.iter().enumerate() {
            if c != 0 {
                next[i - a] += c;
                next[i + a] += c;
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur.into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .map(|(i, c)| (i as i64 - total, c))
        .collect()
}

fn sparse(values: &[u64]) -> BTreeMap<i64, u128> {
    let mut cur = BTreeMap::from([(0i64, 1u128)]);
    for &a in values {
        let a = a as i64;
        let mut next = BTreeMap::new();
        for (&v, &c) in &cur {
            *next.entry(v - a).or_insert(0) += c;
            *next.entry(v + a).or_insert(0) += c;
        }
        cur = next;
    }
    cur
}

/// Exact distribution of the signed sum of one coordinate, by convolving the
/// two-point distributions `{−a_i, +a_i}`.
///
/// Dense over `[−Σa, Σa]` unless fewer than 1/8 of the range can be occupied,
/// in which case a sparse map is used.
pub fn signed_sum_distribution(values: &[u64], budget: u64) -> Result<SignedSumDistribution> {
    distribution_for(0, values, budget)
}

pub(crate) fn distribution_for(coordinate: usize, values: &[u64], budget: u64) -> Result<SignedSumDistribution> {
    let n = values.len();
    if n >= 127 {
        return Err(Error::invalid("signed-sum tables support fewer than 127 terms"));
    }
    let total: u128 = values.iter().map(|&a| u128::from(a)).sum();
    let width = 2 * total + 1;
    let patterns = 1u128 << n;
    let use_sparse = patterns.saturating_mul(8) < width;
    let needed = if use_sparse { patterns.min(width) } else { width };
    if needed > u128::from(budget) || total > i64::MAX as u128 / 2 {
        return Err(Error::Budget {
            resource: "signed-sum table",
            needed,
            budget: u128::from(budget),
        });
    }
    let support = if use_sparse { sparse(values) } else { dense(values, total as i64) };
    Ok(SignedSumDistribution { coordinate, n, support })
}
