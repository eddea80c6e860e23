//! p-norm ball geometry and lattice-point counting.

mod ball;
mod gamma;
mod lattice;

pub use ball::{ball_surface, ball_volume, ln_unit_ball_volume, radius_for_count, PNormBall};
pub use gamma::{gamma, ln_gamma, GAMMA_ARG_MAX, GAMMA_ARG_MIN};
pub use lattice::{
    lattice_count_check, lattice_shell_enumerate, shell_points, LatticeShellSummary,
    DEFAULT_LATTICE_BUDGET,
};
