use affine_cartan::Coweight;

use crate::WeylElement;

/// An element `π^λ w` of `𝒲 = W ⋉ Λ∨`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedElement {
    pub lam: Coweight,
    pub w: WeylElement,
}
