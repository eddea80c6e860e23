//! Lower bounds for distinct subset sums in `Z^k`.
//!
//! A sequence `a_1, …, a_n ∈ [0, M]^k` has distinct subset sums when all `2^n`
//! sums `Σ_{i∈A} a_i` differ. Every such sequence forces `M` to grow like
//! `c(k)·2^{n/k}/√n`; the constant comes from comparing a moment
//! `E‖X‖_p^p` of the signed sum `X = Σ ε_i a_i` (`ε_i = ±1/2`) from above
//! (extremal configuration) and from below (the `2^n` lattice points nearest
//! the origin). The crate provides:
//!
//! - [`combinatorics`]: exact binomials and absolute central moment sums,
//! - [`geometry`]: Gamma, p-norm ball volumes and lattice-shell enumeration,
//! - [`bounds`]: the first-moment, third-moment and variance coefficients,
//! - [`sequence`]: a subset-sum verifier and an exhaustive minimal-`M` search,
//! - [`moments`]: exact and Monte Carlo values of `E‖X‖_p^p`.
//!
//! Floating-point code is generic over [`Real`] (`f32`, `f64`); the `*64`
//! aliases below fix it to `f64`.

pub mod bounds;
pub mod combinatorics;
mod error;
pub mod geometry;
pub mod moments;
mod scalar;
pub mod sequence;
pub mod serde_exact;

pub use error::{Error, Result};
pub use scalar::{ln_bigrational, ln_biguint, rational_string, rational_to_real, Real};

pub use bounds::Method;
pub use sequence::VectorSequence;

pub type PNormBall64 = geometry::PNormBall<f64>;
pub type LatticeShellSummary64 = geometry::LatticeShellSummary<f64>;
pub type BoundReport64 = bounds::BoundReport<f64>;
pub type CrossoverRow64 = bounds::CrossoverRow<f64>;
pub type MomentValue64 = moments::MomentValue<f64>;

pub type PNormBall32 = geometry::PNormBall<f32>;
pub type BoundReport32 = bounds::BoundReport<f32>;
