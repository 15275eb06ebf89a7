//! Truncated series `Σ c_μ e^μ` over the coweight lattice, with exact coefficients in `Q(v)`.
//!
//! Every series lives below a dominant-order anchor and is cut off at a depth measured by
//! `⟨ρ, anchor − μ⟩`. The factor expansions `c(γ)`, `b(γ)` and the products `Δ^w` are built here.

mod factors;
mod poly;
mod series;
mod vcoeff;

use affine_cartan::{CorootAff, Coweight};
use thiserror::Error;

pub use factors::{
    delta, delta_w, delta_w_logged, expand_b, expand_c, expand_geometric, small_inversions, FactorLog, Normalization,
};
pub use poly::LPoly;
pub use series::{Gauge, Series, TruncationContext};
pub use vcoeff::VCoeff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series anchored at {0} and {1} cannot be added")]
    AnchorMismatch(Coweight, Coweight),
    #[error("exponent {0} is not below the anchor")]
    NotBelowAnchor(Coweight),
    #[error("exponent {0} lies outside the Tits cone")]
    OutsideTitsCone(Coweight),
    #[error("zero coroot")]
    ZeroCoroot,
    #[error("{0:?} is not a coroot")]
    NotCoroot(CorootAff),
    #[error("leading coefficient is not a unit")]
    NotUnit,
    #[error("inverting a non-monomial exact series needs a finite depth")]
    NeedsDepth,
    #[error("coefficients are only known to finite v-precision")]
    TruncatedInV,
    #[error("coefficient of {0} is not a Laurent polynomial in v")]
    NotVFinite(Coweight),
    #[error("coefficient of {0} has odd powers of v")]
    OddPower(Coweight),
    #[error("expansion certificate failed for {0}")]
    Certificate(String),
}
