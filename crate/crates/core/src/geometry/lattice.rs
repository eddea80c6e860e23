//! The `2^n` integer points closest to the origin under a p-norm.
//!
//! Points are ranked by the exact integer `Σ|x_i|^p`, ties broken by
//! lexicographic coordinate order. Enumeration scans the ℓ∞ box `[-B, B]^k`
//! and grows `B` until every point that could belong to the selection lies
//! inside the box. Box indices are row-major with coordinate 0 most
//! significant, so ascending index is ascending lexicographic order.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::ball::{ball_volume, radius_for_count};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default cap on the number of candidate points scanned.
pub const DEFAULT_LATTICE_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeShellSummary<T> {
    pub n: u32,
    pub k: u32,
    pub p: u32,
    /// Number of selected points, `2^n`.
    pub points: u64,
    /// `Σ_{s∈A} ‖s‖_p^p`, exact.
    #[serde(serialize_with = "crate::serde_exact::biguint")]
    pub discrete_sum: BigUint,
    /// p-norm of the farthest selected point.
    pub r_discrete: T,
    /// Radius of the continuous ball of volume `2^n`.
    pub r_continuous: T,
    /// `discrete_sum / ((k/(k+p))·2^n·r_continuous^p)`; `None` when `n = 0`.
    pub lemma_ratio: Option<T>,
    /// Half-width of the ℓ∞ box that was scanned.
    pub box_radius: u64,
}

struct Selection {
    box_radius: u64,
    /// `(Σ|x_i|^p, box index)`, sorted.
    keys: Vec<(u128, u64)>,
}

fn max_box_radius(k: u32, budget: u64) -> u64 {
    // largest B with (2B+1)^k <= budget
    let mut b = 0u64;
    while box_size(k, b + 1).is_some_and(|s| s <= u128::from(budget)) {
        b += 1;
    }
    b
}

fn box_size(k: u32, b: u64) -> Option<u128> {
    u128::from(2 * b + 1).checked_pow(k)
}

fn power_table(b: u64, p: u32) -> Vec<u128> {
    (0..=2 * b)
        .map(|d| u128::from(d.abs_diff(b)).pow(p))
        .collect()
}

fn budget_error(k: u32, b: u64, budget: u64) -> Error {
    Error::Budget {
        resource: "lattice enumeration",
        needed: box_size(k, b).unwrap_or(u128::MAX),
        budget: u128::from(budget),
    }
}

/// Scans `[-b, b]^k`, calling `visit(index, norm_p)` for every point.
fn scan_box(k: u32, b: u64, p: u32, mut visit: impl FnMut(u64, u128)) {
    let table = power_table(b, p);
    let side = 2 * b + 1;
    let k = k as usize;
    let mut digits = vec![0u64; k];
    let mut index = 0u64;
    loop {
        let norm: u128 = digits.iter().map(|&d| table[d as usize]).sum();
        visit(index, norm);
        index += 1;
        // odometer, last coordinate fastest
        let mut j = k;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            digits[j] += 1;
            if digits[j] < side {
                break;
            }
            digits[j] = 0;
        }
    }
}

fn select(n: u32, k: u32, p: u32, budget: u64) -> Result<Selection> {
    if k == 0 || p == 0 {
        return Err(Error::invalid(format!("need k >= 1 and p >= 1, got k = {k}, p = {p}")));
    }
    if n >= 63 || (1u64 << n) > budget {
        return Err(Error::Budget {
            resource: "lattice enumeration",
            needed: 1u128 << n.min(127),
            budget: u128::from(budget),
        });
    }
    let count = 1usize << n;
    let b_max = max_box_radius(k, budget);
    let r: f64 = radius_for_count(n, k, p)?;
    let mut b = (r.ceil() as u64).max(1);
    loop {
        if b > b_max {
            return Err(budget_error(k, b, budget));
        }
        // every point with norm below (b+1)^p lies inside the box
        let limit = u128::from(b + 1).pow(p);
        let mut keys = Vec::new();
        scan_box(k, b, p, |index, norm| {
            if norm < limit {
                keys.push((norm, index));
            }
        });
        if keys.len() >= count {
            if keys.len() > count {
                keys.select_nth_unstable(count - 1);
                keys.truncate(count);
            }
            keys.sort_unstable();
            return Ok(Selection { box_radius: b, keys });
        }
        if b == b_max {
            return Err(budget_error(k, b + 1, budget));
        }
        b = (b + (b / 8).max(1)).min(b_max);
    }
}

fn decode(index: u64, k: u32, b: u64) -> Vec<i64> {
    let side = 2 * b + 1;
    let mut coords = vec![0i64; k as usize];
    let mut rest = index;
    for c in coords.iter_mut().rev() {
        *c = (rest % side) as i64 - b as i64;
        rest /= side;
    }
    coords
}

/// The selected points themselves, in (norm, lexicographic) order.
pub fn shell_points(n: u32, k: u32, p: u32, budget: u64) -> Result<Vec<Vec<i64>>> {
    let sel = select(n, k, p, budget)?;
    Ok(sel
        .keys
        .iter()
        .map(|&(_, index)| decode(index, k, sel.box_radius))
        .collect())
}

/// Enumerates the `2^n` origin-closest points of `Z^k` and compares their
/// p-power sum with the continuous prediction `(k/(k+p))·2^n·R^p`.
pub fn lattice_shell_enumerate<T: Real>(
    n: u32,
    k: u32,
    p: u32,
    budget: u64,
) -> Result<LatticeShellSummary<T>> {
    let sel = select(n, k, p, budget)?;
    let discrete_sum = sel
        .keys
        .iter()
        .fold(BigUint::zero(), |acc, &(norm, _)| acc + norm);
    let farthest = sel.keys.last().map_or(0, |&(norm, _)| norm);
    let r_discrete = T::lit(farthest.to_f64().unwrap_or(f64::INFINITY)).powf(T::one() / T::from_u32(p).unwrap());
    let r_continuous: T = radius_for_count(n, k, p)?;
    let lemma_ratio = (n > 0).then(|| {
        let kt = T::from_u32(k).unwrap();
        let share = kt / (kt + T::from_u32(p).unwrap());
        let predicted = share * T::from_u64(1u64 << n).unwrap() * r_continuous.powi(p as i32);
        T::lit(discrete_sum.to_f64().unwrap_or(f64::INFINITY)) / predicted
    });
    Ok(LatticeShellSummary {
        n,
        k,
        p,
        points: sel.keys.len() as u64,
        discrete_sum,
        r_discrete,
        r_continuous,
        lemma_ratio,
        box_radius: sel.box_radius,
    })
}

/// `|#{s ∈ Z^k : ‖s‖_p ≤ R} − V_{k,p}(R)| / V_{k,p}(R)`.
pub fn lattice_count_check<T: Real>(k: u32, p: u32, radius: T, budget: u64) -> Result<T> {
    let volume = ball_volume(k, p, radius)?;
    if volume <= T::zero() {
        return Err(Error::invalid("lattice count check needs radius > 0"));
    }
    let b = radius.floor().to_u64().unwrap_or(u64::MAX);
    if box_size(k, b).is_none_or(|s| s > u128::from(budget)) {
        return Err(budget_error(k, b, budget));
    }
    let limit = radius.powi(p as i32);
    let mut count = 0u64;
    scan_box(k, b, p, |_, norm| {
        if T::lit(norm as f64) <= limit {
            count += 1;
        }
    });
    Ok((T::from_u64(count).unwrap() - volume).abs() / volume)
}
