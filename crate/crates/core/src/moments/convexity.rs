use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use super::exact::exact_moment;
use super::monte_carlo::seeded_rng;
use crate::error::{Error, Result};
use crate::sequence::VectorSequence;

/// Largest `n` for the convexity probe.
pub const CONVEXITY_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexityCheck {
    /// `f(lo) + f(hi) ≥ 2·f(mid)` failed.
    Midpoint,
    /// `f(x) ≤ max(f(x_i = 0), f(x_i = M))` failed.
    Vertex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityCounterexample {
    pub check: ConvexityCheck,
    pub x: Vec<u64>,
    pub coordinate: usize,
    pub lo: u64,
    pub hi: u64,
    #[serde(serialize_with = "crate::serde_exact::rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "crate::serde_exact::rational")]
    pub rhs: BigRational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConvexityVerdict {
    Pass { trials: u64 },
    Counterexample(Box<ConvexityCounterexample>),
}

/// `f(x) = E|Σ ε_i x_i|`, exact.
fn first_moment(x: &[u64]) -> Result<BigRational> {
    let seq = VectorSequence::scalars(x)?;
    Ok(exact_moment(&seq, 1)?.exact().cloned().expect("exact path"))
}

fn with_coordinate(x: &[u64], i: usize, value: u64) -> Vec<u64> {
    let mut y = x.to_vec();
    y[i] = value;
    y
}

/// Random checks that `x_i ↦ E|Σ ε_i x_i|` is convex in each coordinate and
/// maximized at a vertex of `[0, M]`.
pub fn convexity_probe(n: usize, bound: u64, trials: u64, seed: u64) -> Result<ConvexityVerdict> {
    if n == 0 || n > CONVEXITY_MAX_N {
        return Err(Error::invalid(format!("convexity probe needs 1 <= n <= {CONVEXITY_MAX_N}")));
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..trials {
        let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=bound)).collect();
        let i = rng.gen_range(0..n);
        let lo = rng.gen_range(0..=bound);
        let hi = lo + 2 * rng.gen_range(0..=(bound - lo) / 2);
        let mid = (lo + hi) / 2;

        let f_lo = first_moment(&with_coordinate(&x, i, lo))?;
        let f_hi = first_moment(&with_coordinate(&x, i, hi))?;
        let f_mid = first_moment(&with_coordinate(&x, i, mid))?;
        let (lhs, rhs) = (&f_lo + &f_hi, BigRational::from_integer(2.into()) * f_mid);
        if lhs < rhs {
            return Ok(ConvexityVerdict::Counterexample(Box::new(ConvexityCounterexample {
                check: ConvexityCheck::Midpoint,
                x,
                coordinate: i,
                lo,
                hi,
                lhs,
                rhs,
            })));
        }

        let f_x = first_moment(&x)?;
        let f_zero = first_moment(&with_coordinate(&x, i, 0))?;
        let f_top = first_moment(&with_coordinate(&x, i, bound))?;
        let vertex = f_zero.max(f_top);
        if f_x > vertex {
            return Ok(ConvexityVerdict::Counterexample(Box::new(ConvexityCounterexample {
                check: ConvexityCheck::Vertex,
                x,
                coordinate: i,
                lo: 0,
                hi: bound,
                lhs: f_x,
                rhs: vertex,
            })));
        }
    }
    Ok(ConvexityVerdict::Pass { trials })
}
