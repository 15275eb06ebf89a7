//! The algebra generated by `Θ_λ` (`λ ∈ Λ∨`) and `T_w` (`w ∈ W`) with the Bernstein relations.
//!
//! Elements are kept in the normal form `Σ c · Θ_λ T_w`. With `q = v⁻²` the quadratic relation is
//! `(T_a + 1)(T_a − q) = 0` and
//! `T_a Θ_λ − Θ_{w_a λ} T_a = (q − 1)(Θ_λ − Θ_{w_a λ})/(1 − Θ_{−a∨})`.

mod theta;

use std::collections::BTreeMap;
use std::fmt;

use affine_cartan::{AffineCartanData, Coweight};
use affine_series::VCoeff;
use affine_weyl::{WeylElement, WeylGroup};
use thiserror::Error;

pub use theta::{ThetaConstruction, ThetaExpr, ThetaPolicy};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("{0:?} is outside the Tits cone")]
    NotInTitsCone(Coweight),
    #[error("recursion budget {budget} exhausted along {path:?}")]
    Budget { budget: usize, path: Vec<Coweight> },
    #[error("simple index {0} out of range")]
    BadIndex(usize),
}

/// `Σ c · Θ_λ T_w`, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<(Coweight, WeylElement), VCoeff>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(lam: Coweight, w: WeylElement, c: VCoeff) -> Self {
        let mut x = Self::zero();
        x.add_term(lam, w, c);
        x
    }

    pub fn add_term(&mut self, lam: Coweight, w: WeylElement, c: VCoeff) {
        if c.is_zero() {
            return;
        }
        let key = (lam, w);
        match self.terms.get_mut(&key) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &WeylElement, &VCoeff)> {
        self.terms.iter().map(|((l, w), c)| (l, w, c))
    }

    pub fn coeff(&self, lam: &Coweight, w: &WeylElement) -> VCoeff {
        self.terms.get(&(*lam, *w)).cloned().unwrap_or_else(VCoeff::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, w), c) in &other.terms {
            out.add_term(*l, *w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&VCoeff::int(-1)))
    }

    pub fn scale(&self, k: &VCoeff) -> Self {
        let mut out = Self::zero();
        for ((l, w), c) in &self.terms {
            out.add_term(*l, *w, c * k);
        }
        out
    }

    /// `Θ_shift · self`.
    pub fn theta_shift(&self, shift: &Coweight) -> Self {
        HeckeElement { terms: self.terms.iter().map(|((l, w), c)| ((*l + *shift, *w), c.clone())).collect() }
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((l, w), c)| format!("({c})·Θ{l:?}·T{w:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn q() -> VCoeff {
    VCoeff::mono(1, -2)
}

fn q_minus_one() -> VCoeff {
    &q() - &VCoeff::one()
}

/// Normal-form arithmetic over a fixed affine Weyl group.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: WeylGroup,
}

impl HeckeAlgebra {
    pub fn new(group: WeylGroup) -> Self {
        HeckeAlgebra { group }
    }

    pub fn from_name(name: &str) -> Result<Self, affine_cartan::CartanError> {
        Ok(Self::new(WeylGroup::from_name(name)?))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn cartan(&self) -> &AffineCartanData {
        self.group.cartan()
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::monomial(self.cartan().zero(), self.group.identity(), VCoeff::one())
    }

    pub fn theta(&self, lam: Coweight) -> HeckeElement {
        HeckeElement::monomial(lam, self.group.identity(), VCoeff::one())
    }

    pub fn t(&self, w: &WeylElement) -> HeckeElement {
        HeckeElement::monomial(self.cartan().zero(), *w, VCoeff::one())
    }

    pub fn t_simple(&self, a: usize) -> HeckeElement {
        self.t(&self.group.s(a))
    }

    /// `T_a⁻¹ = v²T_a + (v² − 1)`.
    pub fn t_simple_inv(&self, a: usize) -> HeckeElement {
        let v2 = VCoeff::mono(1, 2);
        let mut x = HeckeElement::monomial(self.cartan().zero(), self.group.s(a), v2.clone());
        x.add_term(self.cartan().zero(), self.group.identity(), &v2 - &VCoeff::one());
        x
    }

    /// `T_w` as the product along the canonical reduced word.
    pub fn t_word(&self, word: &[usize]) -> HeckeElement {
        let mut x = self.one();
        for &a in word {
            x = self.mul(&x, &self.t_simple(a));
        }
        x
    }

    /// `T_a Θ_λ − Θ_{w_a λ} T_a`, expanded as a finite sum of `Θ`'s.
    pub fn bernstein_commute(&self, a: usize, lam: &Coweight) -> HeckeElement {
        let data = self.cartan();
        let k = data.simple_pairing(a, lam);
        let av = data.simple_coroot(a);
        let mut out = HeckeElement::zero();
        let id = self.group.identity();
        if k > 0 {
            for j in 0..k {
                out.add_term(*lam - j * av, id, q_minus_one());
            }
        } else if k < 0 {
            let s = data.reflect_coweight(a, lam);
            let c = &VCoeff::one() - &q();
            for j in 0..-k {
                out.add_term(s - j * av, id, c.clone());
            }
        }
        out
    }

    /// `T_a · x`.
    pub fn left_mul_simple(&self, a: usize, x: &HeckeElement) -> HeckeElement {
        let data = self.cartan();
        let sa = self.group.s(a);
        let mut out = HeckeElement::zero();
        for ((nu, w), c) in &x.terms {
            // Θ_{w_a ν} T_a T_w
            let snu = data.reflect_coweight(a, nu);
            let saw = self.group.mul(&sa, w);
            if self.group.is_left_descent(w, a) {
                out.add_term(snu, *w, c * &q_minus_one());
                out.add_term(snu, saw, c * &q());
            } else {
                out.add_term(snu, saw, c.clone());
            }
            for ((kappa, _), b) in &self.bernstein_commute(a, nu).terms {
                out.add_term(*kappa, *w, c * b);
            }
        }
        out
    }

    /// `T_w · x`.
    pub fn left_mul_t(&self, w: &WeylElement, x: &HeckeElement) -> HeckeElement {
        let mut out = x.clone();
        for &a in self.group.reduced_word(w).iter().rev() {
            out = self.left_mul_simple(a, &out);
        }
        out
    }

    pub fn mul(&self, x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
        let mut by_w: BTreeMap<WeylElement, HeckeElement> = BTreeMap::new();
        let mut out = HeckeElement::zero();
        for ((lam, w), c) in &x.terms {
            let twy = by_w.entry(*w).or_insert_with(|| self.left_mul_t(w, y));
            for ((nu, u), d) in &twy.terms {
                out.add_term(*lam + *nu, *u, c * d);
            }
        }
        out
    }

    /// Split by the `d`-degree of the `Θ` part.
    pub fn grade(&self, x: &HeckeElement) -> BTreeMap<i64, HeckeElement> {
        let mut out: BTreeMap<i64, HeckeElement> = BTreeMap::new();
        for ((lam, w), c) in &x.terms {
            out.entry(lam.d).or_default().add_term(*lam, *w, c.clone());
        }
        out
    }

    /// Every monomial has positive degree, or degree zero with `Θ` central.
    pub fn is_in_h_plus(&self, x: &HeckeElement) -> bool {
        x.terms.keys().all(|(lam, _)| lam.d > 0 || (lam.d == 0 && lam.is_central()))
    }
}
