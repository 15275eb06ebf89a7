//! Demazure–Lusztig operators `T̃_a = c(a)[w_a] + b(a)` on truncated series, the shell-summed
//! symmetrizer `Σ v^{ℓ(w)} T̃_w = Σ_τ C_τ [τ]`, and Poincaré data of `W_o` and `W`.

mod dl;
mod poincare;
mod symmetrizer;

use affine_cartan::Coweight;
use affine_series::SeriesError;
use affine_weyl::{WeylElement, WeylError};
use thiserror::Error;

pub use dl::{dl_along, dl_apply, dl_word, Applied};
pub use poincare::{poincare_data, PoincareData};
pub use symmetrizer::{check_proportionality, right_compose_simple, symmetrize, Proportionality, ShellAudit, ShellExpansion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyrepError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("tail of the rank-one expansion at {0} did not cancel")]
    Tail(Coweight),
    #[error("W_o(v²) = {0:?} does not factor into cyclotomic pieces")]
    Factorization(Vec<u64>),
    #[error("proportionality fails at τ = {tau:?}, exponent {cw}")]
    Mismatch { tau: WeylElement, cw: Coweight },
    #[error("no stabilization within {0} shells")]
    NotStabilized(u32),
}
