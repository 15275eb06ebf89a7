//! The spherical image of a dominant coweight `λ` in the completed group algebra.
//!
//! Three computations are offered: the functions `J_w(λ)` (by a rank-one recursion and by
//! Demazure–Lusztig operators), their sum over minimal coset representatives of `W/W_λ`,
//! and the quotient `H_λ/H₀` of two `Δ`-weighted orbit sums. Coefficients are kept in `v`
//! with `v² = q⁻¹` until a rational `q` is substituted.

mod disassembly;
mod jfun;
mod macdonald;
mod result;

use affine_cartan::Coweight;
use affine_polyrep::PolyrepError;
use affine_series::SeriesError;
use affine_weyl::WeylError;
use thiserror::Error;

pub use disassembly::{disassemble, Disassembly, ShellReport};
pub use jfun::{j_flat, j_from_flat, j_function, q_rho, JRoute, JTable};
pub use macdonald::{delta_orbit_sum, h_zero, macdonald_quotient, reflection_ratio, DeltaSum, HZeroRoute};
pub use result::{
    phi_table, satake_by_disassembly, satake_by_macdonald, w_invariance_failures, QValue, Route, SatakeResult,
    Window,
};

#[derive(Debug, Error)]
pub enum SphericalError {
    #[error("{0} is not dominant")]
    NotDominant(Coweight),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Polyrep(#[from] PolyrepError),
    #[error("coefficient of e^{0} is not a polynomial in v²")]
    NotPolynomial(Coweight),
    #[error("expansion left a stray term at e^{0}")]
    Certificate(Coweight),
    #[error("no two consecutive empty shells within {budget} shells")]
    NotStabilized { budget: u32, audit: Vec<ShellReport> },
    #[error("coefficient of e^{cw} reaches v^{degree}, too close to the v-window {vmax}")]
    VFiniteness { cw: Coweight, degree: i32, vmax: i32 },
    #[error("a v-window is required for this route")]
    NeedsVWindow,
    #[error("the two routes disagree at {0:?}")]
    RouteMismatch(Vec<Coweight>),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
