//! `J_w(λ) = q^{⟨ρ,λ⟩}·v^{ℓ(w)} T̃_w e^λ` with `v² = q⁻¹`, by two independent routes.

use std::collections::HashMap;

use affine_cartan::Coweight;
use affine_polyrep::dl_word;
use affine_series::{expand_geometric, LPoly, Series, TruncationContext, VCoeff};
use affine_weyl::{WeylElement, WeylGroup};
use rayon::prelude::*;

use crate::SphericalError;

/// Extra layers expanded below `wλ` to check that the geometric tails cancel.
const MARGIN: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JRoute {
    /// Peel a left descent and apply the rank-one formula with expanded prefactors.
    Recursion,
    /// Apply the Demazure–Lusztig operators of a reduced word to `e^λ`.
    Operator,
}

/// `q^{⟨ρ,λ⟩} = v^{−2⟨ρ,λ⟩}`.
pub fn q_rho(g: &WeylGroup, lam: &Coweight) -> VCoeff {
    VCoeff::mono(1, -2 * g.cartan().rho_pairing(lam) as i32)
}

fn check_polynomial(s: &Series) -> Result<(), SphericalError> {
    for (cw, c) in s.terms() {
        match c.as_laurent() {
            Some(p) if p.is_even() => {}
            _ => return Err(SphericalError::NotPolynomial(*cw)),
        }
    }
    Ok(())
}

fn dominant(g: &WeylGroup, lam: &Coweight) -> Result<(), SphericalError> {
    if g.cartan().is_dominant(lam) {
        Ok(())
    } else {
        Err(SphericalError::NotDominant(*lam))
    }
}

/// Memoized recursion `J_{w_a w'} = (1 − q⁻¹e^{a∨})/(1 − e^{a∨})·w_a J_{w'} + (q⁻¹ − 1)/(1 − e^{a∨})·J_{w'}`.
pub struct JTable<'g> {
    g: &'g WeylGroup,
    lam: Coweight,
    memo: HashMap<WeylElement, Series>,
}

impl<'g> JTable<'g> {
    pub fn new(g: &'g WeylGroup, lam: Coweight) -> Result<Self, SphericalError> {
        dominant(g, &lam)?;
        let mut memo = HashMap::new();
        memo.insert(g.identity(), Series::monomial(g.cartan(), lam, q_rho(g, &lam)));
        Ok(JTable { g, lam, memo })
    }

    pub fn lambda(&self) -> Coweight {
        self.lam
    }

    /// `J_w`, filling in every suffix on the way.
    pub fn get(&mut self, w: &WeylElement) -> Result<Series, SphericalError> {
        if let Some(j) = self.memo.get(w) {
            return Ok(j.clone());
        }
        let a = self.left_descent(w);
        let rest = self.g.mul(&self.g.s(a), w);
        let prev = self.get(&rest)?;
        let j = self.step(a, w, &prev)?;
        self.memo.insert(w.clone(), j.clone());
        Ok(j)
    }

    /// Compute a whole shell whose suffixes are already known, in parallel.
    pub fn extend(&mut self, shell: &[WeylElement]) -> Result<(), SphericalError> {
        let done: Vec<(WeylElement, Series)> = shell
            .par_iter()
            .filter(|w| !self.memo.contains_key(*w))
            .map(|w| {
                let a = self.left_descent(w);
                let rest = self.g.mul(&self.g.s(a), w);
                let prev = self.memo.get(&rest).expect("suffix computed in an earlier shell");
                self.step(a, w, prev).map(|j| (w.clone(), j))
            })
            .collect::<Result<_, _>>()?;
        self.memo.extend(done);
        Ok(())
    }

    pub fn cached(&self, w: &WeylElement) -> Option<&Series> {
        self.memo.get(w)
    }

    /// Drop cached values of length below `len`.
    pub fn forget_below(&mut self, len: u32) {
        let g = self.g;
        self.memo.retain(|w, _| g.length(w) >= len);
    }

    fn left_descent(&self, w: &WeylElement) -> usize {
        (1..=self.g.num_simple()).find(|&i| self.g.is_left_descent(w, i)).expect("w ≠ 1")
    }

    fn step(&self, a: usize, w: &WeylElement, prev: &Series) -> Result<Series, SphericalError> {
        let g = self.g;
        let data = g.cartan();
        let lam_w = g.act(w, &self.lam);
        let bottom = (data.rho_pairing(&self.lam) - data.rho_pairing(&lam_w)) as u32;
        let depth = bottom + MARGIN;
        let av = data.simple_coroot_aff(a);
        let v2 = VCoeff::mono(1, 2);
        // (1 − v²e^{a∨})/(1 − e^{a∨}) = (v² − e^{−a∨})/(1 − e^{−a∨})
        let p = expand_geometric(data, &av, &v2, &VCoeff::int(-1), depth)?;
        // (v² − 1)/(1 − e^{a∨}) = (1 − v²)e^{−a∨}/(1 − e^{−a∨})
        let r = expand_geometric(data, &av, &VCoeff::zero(), &(&VCoeff::one() - &v2), depth)?;
        let (moved, _) = prev.w_act(g, &g.s(a))?;
        let out = p.mul(&moved).add(&r.mul(prev))?;
        for (cw, _) in out.terms() {
            if out.depth_of(cw) > bottom as i64 {
                return Err(SphericalError::Certificate(*cw));
            }
        }
        let exact = out.with_context(TruncationContext::exact(self.lam))?;
        check_polynomial(&exact)?;
        Ok(exact)
    }
}

/// `J_w(λ)` as an exact finite sum with coefficients in `Z[v²]·q^{⟨ρ,λ⟩}`.
pub fn j_function(g: &WeylGroup, w: &WeylElement, lam: &Coweight, route: JRoute) -> Result<Series, SphericalError> {
    dominant(g, lam)?;
    match route {
        JRoute::Recursion => JTable::new(g, *lam)?.get(w),
        JRoute::Operator => {
            let e = Series::monomial(g.cartan(), *lam, VCoeff::one());
            let img = dl_word(g, w, &e)?.series;
            let k = &VCoeff::mono(1, g.length(w) as i32) * &q_rho(g, lam);
            let out = img.scale(&k);
            check_polynomial(&out)?;
            Ok(out)
        }
    }
}

/// `J♭_w = q^{ℓ(w)} J_w`.
pub fn j_flat(g: &WeylGroup, w: &WeylElement, j: &Series) -> Series {
    j.scale(&VCoeff::mono(1, -2 * g.length(w) as i32))
}

/// Inverse of [`j_flat`].
pub fn j_from_flat(g: &WeylGroup, w: &WeylElement, flat: &Series) -> Series {
    flat.scale(&VCoeff::mono(1, 2 * g.length(w) as i32))
}

/// Coefficients with the factor `q^{⟨ρ,λ⟩}` removed, as polynomials in `v`.
pub(crate) fn strip_q_rho(g: &WeylGroup, lam: &Coweight, s: &Series) -> Vec<(Coweight, LPoly)> {
    let k = VCoeff::mono(1, 2 * g.cartan().rho_pairing(lam) as i32);
    s.sorted_terms()
        .into_iter()
        .map(|(cw, c)| (cw, (&c * &k).as_laurent().cloned().expect("Laurent coefficient")))
        .collect()
}
