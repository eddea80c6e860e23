//! Exact and sampled values of the statistical bridges `E‖X‖_p^p` for
//! `X = Σ ε_i a_i` with independent `ε_i = ±1/2`.

mod convexity;
mod distribution;
mod exact;
mod monte_carlo;

pub use convexity::{
    convexity_probe, ConvexityCheck, ConvexityCounterexample, ConvexityVerdict, CONVEXITY_MAX_N,
};
pub use distribution::{signed_sum_distribution, SignedSumDistribution, DEFAULT_TABLE_BUDGET};
pub use exact::{
    exact_moment, exact_moment_with_budget, extremal_moment, variance_identity_check, MomentValue,
    VarianceCheck,
};
pub use monte_carlo::{mc_estimate, seeded_rng, DEFAULT_SEED};
