//! Affinized roots `a + kπ` with `a` a real root and `k ∈ Z`.
//!
//! Elements of `𝒲` are stored as `π^λ w` ([`ExtendedElement`]); the same element written
//! `w π^μ` has `μ = w⁻¹λ`. Both actions below are stated in the second form and evaluated
//! in the first.

mod inversion;
mod leb;

use std::fmt;

use affine_cartan::{Coweight, RootAff};
use affine_weyl::{ExtendedElement, WeylError, WeylGroup};
use thiserror::Error;

pub use inversion::{inversion_sets, scan_inversion_sets, Cutoff, InversionSets};
pub use leb::{leb_probe, leb_search, replay_chain, reverse_chain, LebBound, LebProbe, LebSearch};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffRootsError {
    #[error("{0} is not a real root")]
    NotReal(RootAff),
    #[error("translation part {0} is outside the Tits cone")]
    NotInTitsCone(Coweight),
    #[error("inversion set not closed: {0} lies past the cutoff")]
    Incomplete(AffinizedRoot),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// `a + kπ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinizedRoot {
    pub root: RootAff,
    pub k: i64,
}

impl AffinizedRoot {
    pub fn new(g: &WeylGroup, root: RootAff, k: i64) -> Result<Self, AffRootsError> {
        if !g.cartan().is_real_root(&root) {
            return Err(AffRootsError::NotReal(root));
        }
        Ok(AffinizedRoot { root, k })
    }
}

impl std::ops::Neg for AffinizedRoot {
    type Output = AffinizedRoot;
    fn neg(self) -> AffinizedRoot {
        AffinizedRoot { root: -self.root, k: -self.k }
    }
}

impl fmt::Debug for AffinizedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}){:+}π", self.root, self.k)
    }
}

impl fmt::Display for AffinizedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The four pieces of `𝓡`. The upper sign is the sign of `a`, the lower one is the local sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    /// `a > 0, k ≥ 0`
    PlusPlus,
    /// `a > 0, k < 0`
    PlusMinus,
    /// `a < 0, k > 0`
    MinusPlus,
    /// `a < 0, k ≤ 0`
    MinusMinus,
}

impl Quadrant {
    /// `a > 0`, i.e. membership in `𝓡⁺`.
    pub fn upper_positive(self) -> bool {
        matches!(self, Quadrant::PlusPlus | Quadrant::PlusMinus)
    }

    /// Membership in `𝓡₊ = 𝓡₊⁺ ∪ 𝓡₊⁻`.
    pub fn lower_positive(self) -> bool {
        matches!(self, Quadrant::PlusPlus | Quadrant::MinusPlus)
    }

    pub fn label(self) -> &'static str {
        match self {
            Quadrant::PlusPlus => "R_+^+",
            Quadrant::PlusMinus => "R_-^+",
            Quadrant::MinusPlus => "R_+^-",
            Quadrant::MinusMinus => "R_-^-",
        }
    }
}

pub fn classify(g: &WeylGroup, alpha: &AffinizedRoot) -> Quadrant {
    let pos = g.cartan().is_positive_root(&alpha.root);
    match (pos, alpha.k) {
        (true, k) if k >= 0 => Quadrant::PlusPlus,
        (true, _) => Quadrant::PlusMinus,
        (false, k) if k > 0 => Quadrant::MinusPlus,
        (false, _) => Quadrant::MinusMinus,
    }
}

/// `w π^μ` as `π^{wμ} w`.
pub fn from_right_form(g: &WeylGroup, w: &affine_weyl::WeylElement, mu: &Coweight) -> ExtendedElement {
    g.extended(g.act(w, mu), *w)
}

/// The `μ` with `x = w π^μ`.
pub fn right_translation(g: &WeylGroup, x: &ExtendedElement) -> Coweight {
    g.act(&g.inverse(&x.w), &x.lam)
}

/// `w π^μ · (a + kπ) = wa + (⟨μ, a⟩ + k)π`.
pub fn act_left(g: &WeylGroup, x: &ExtendedElement, alpha: &AffinizedRoot) -> AffinizedRoot {
    let mu = right_translation(g, x);
    let k = g.cartan().pairing(&alpha.root, &mu) + alpha.k;
    AffinizedRoot { root: g.act_root(&x.w, &alpha.root), k }
}

/// `(a + nπ) · π^λ w = w⁻¹a + (n − ⟨λ, a⟩)π`.
pub fn act_right(g: &WeylGroup, alpha: &AffinizedRoot, x: &ExtendedElement) -> AffinizedRoot {
    let k = alpha.k - g.cartan().pairing(&alpha.root, &x.lam);
    AffinizedRoot { root: g.act_root(&g.inverse(&x.w), &alpha.root), k }
}

/// `w_α = w_a π^{n a∨}` for `α = a + nπ`.
pub fn reflection_element(g: &WeylGroup, alpha: &AffinizedRoot) -> Result<ExtendedElement, AffRootsError> {
    let wa = g.reflection(&alpha.root)?;
    let co = g.cartan().coroot_of(&alpha.root).map_err(|_| AffRootsError::NotReal(alpha.root))?;
    Ok(from_right_form(g, &wa, &co.to_coweight().scale(alpha.k)))
}

/// `α` is `x`-negative when `α · x ∈ 𝓡₋`.
pub fn is_negative_for(g: &WeylGroup, alpha: &AffinizedRoot, x: &ExtendedElement) -> bool {
    !classify(g, &act_right(g, alpha, x)).lower_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> WeylGroup {
        WeylGroup::from_name("A1").unwrap()
    }

    #[test]
    fn quadrants_of_simple_root() {
        let g = a1();
        let a = RootAff::new(&[1], 0);
        assert_eq!(classify(&g, &AffinizedRoot { root: a, k: 0 }), Quadrant::PlusPlus);
        assert_eq!(classify(&g, &AffinizedRoot { root: -a, k: 0 }), Quadrant::MinusMinus);
        assert_eq!(classify(&g, &AffinizedRoot { root: a, k: -1 }), Quadrant::PlusMinus);
        assert_eq!(classify(&g, &AffinizedRoot { root: -a, k: 1 }), Quadrant::MinusPlus);
    }

    #[test]
    fn imaginary_roots_are_rejected() {
        let g = a1();
        assert!(AffinizedRoot::new(&g, RootAff::new(&[0], 1), 0).is_err());
    }

    #[test]
    fn zero_level_reflection_is_plain() {
        let g = a1();
        let a = RootAff::new(&[1], 1);
        let x = reflection_element(&g, &AffinizedRoot { root: a, k: 0 }).unwrap();
        assert!(x.lam.is_zero());
        assert_eq!(x.w, g.reflection(&a).unwrap());
    }
}
