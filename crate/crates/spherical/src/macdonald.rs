//! `Δ`-weighted orbit sums `Σ_w Δ^w e^{wλ}`, the constant `H₀` and the quotient `H_λ/H₀`.
//!
//! `Δ^w` is built along right multiplication: if `w s_a > w` and `γ = w a∨`, then
//! `Δ^{w s_a} = Δ^w · (v² − e^{−γ})/(1 − v²e^{−γ})`. Along such a chain neither
//! `ℓ(w) − k_D(w)` (with `k_D` counting inversions of height `≤ D`) nor the depth of `wλ`
//! decreases, so both prunings below discard whole subtrees.

use std::collections::BTreeMap;

use affine_cartan::{AffineCartanData, CorootAff, Coweight};
use affine_polyrep::poincare_data;
use affine_series::{delta, LPoly, Series, TruncationContext, VCoeff};
use affine_weyl::{WeylElement, WeylGroup};
use rayon::prelude::*;

use crate::SphericalError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HZeroRoute {
    /// `(Σ_w Δ^w) / W(v²)`.
    Symmetrizer,
    /// `∏_j ∏_{i≥1} (1 − v^{2m_j}e^{−i𝐜})/(1 − v^{2(m_j+1)}e^{−i𝐜})`.
    Product,
}

/// `(v² − x)/(1 − v²x)` with `x = e^{−γ}`, `γ > 0`: `v² + Σ_{j≥1} (v^{2j+2} − v^{2j−2}) x^j`.
pub fn reflection_ratio(
    data: &AffineCartanData,
    gamma: &CorootAff,
    depth: u32,
    vmax: i32,
) -> Result<Series, SphericalError> {
    let zero = data.zero();
    let ctx = TruncationContext { anchor: zero, depth: Some(depth), vprec: Some(vmax) };
    let step = gamma.to_coweight();
    let ht = data.coroot_height(gamma);
    let mut out = Series::zero(data, ctx);
    out.add_term(zero, VCoeff::mono(1, 2))?;
    let mut j = 1i64;
    while j * ht <= depth as i64 {
        let c = LPoly::from_terms(&[(2 * j as i32 + 2, 1), (2 * j as i32 - 2, -1)]);
        out.add_term(zero - j * step, VCoeff::poly(c))?;
        j += 1;
    }
    let mut den = Series::zero(data, ctx);
    den.add_term(zero, VCoeff::one())?;
    den.add_term(-step, VCoeff::mono(-1, 2))?;
    let mut num = Series::zero(data, ctx);
    num.add_term(zero, VCoeff::mono(1, 2))?;
    num.add_term(-step, VCoeff::int(-1))?;
    if !den.mul(&out).agrees_with(&num, Some(depth), Some(vmax)) {
        return Err(SphericalError::Certificate(-step));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DeltaSum {
    /// `Σ_w Δ^w e^{wλ}`, anchored at `λ`.
    pub series: Series,
    pub elements: usize,
    pub max_length: u32,
}

struct Node {
    w: WeylElement,
    delta: Series,
    small: u32,
}

/// `Σ_{w ∈ W} Δ^w e^{wλ}` on the window `(depth, vmax)`.
pub fn delta_orbit_sum(g: &WeylGroup, lam: &Coweight, depth: u32, vmax: i32) -> Result<DeltaSum, SphericalError> {
    let data = g.cartan();
    if !data.is_dominant(lam) {
        return Err(SphericalError::NotDominant(*lam));
    }
    let rho_lam = data.rho_pairing(lam);
    let ctx = TruncationContext { anchor: *lam, depth: Some(depth), vprec: Some(vmax) };
    let mut total = Series::zero(data, ctx);
    let mut shell = vec![Node { w: g.identity(), delta: delta(g, depth).truncate_v(vmax), small: 0 }];
    let mut elements = 0;
    let mut len = 0u32;
    while !shell.is_empty() {
        for node in &shell {
            let top = g.act(&node.w, lam);
            total = total.add(&node.delta.shift(top).reanchor(*lam)?)?;
        }
        elements += shell.len();
        let mut next: BTreeMap<WeylElement, (usize, CorootAff, u32)> = BTreeMap::new();
        for (idx, node) in shell.iter().enumerate() {
            for a in 1..=g.num_simple() {
                if g.is_right_descent(&node.w, a) {
                    continue;
                }
                let child = g.mul(&node.w, &g.s(a));
                if next.contains_key(&child) {
                    continue;
                }
                let gamma = g.act_coroot(&node.w, &data.simple_coroot_aff(a));
                let small = node.small + u32::from(data.coroot_height(&gamma) <= depth as i64);
                if 2 * (len as i64 + 1 - small as i64) > vmax as i64 {
                    continue;
                }
                if rho_lam - data.rho_pairing(&g.act(&child, lam)) > depth as i64 {
                    continue;
                }
                next.insert(child, (idx, gamma, small));
            }
        }
        shell = next
            .into_par_iter()
            .map(|(w, (idx, gamma, small))| {
                let r = reflection_ratio(data, &gamma, depth, vmax)?;
                Ok(Node { w, delta: shell[idx].delta.mul(&r).truncate_v(vmax), small })
            })
            .collect::<Result<_, SphericalError>>()?;
        if !shell.is_empty() {
            len += 1;
        }
    }
    Ok(DeltaSum { series: total, elements, max_length: len })
}

fn scale_series(s: &Series, k: &VCoeff, vmax: i32) -> Result<Series, SphericalError> {
    let p = k.expand_v(vmax)?;
    Ok(s.scale(&VCoeff::poly(p)).truncate_v(vmax))
}

fn product_h_zero(g: &WeylGroup, depth: u32, vmax: i32) -> Result<Series, SphericalError> {
    let data = g.cartan();
    let pd = poincare_data(g)?;
    let zero = data.zero();
    let ctx = TruncationContext { anchor: zero, depth: Some(depth), vprec: Some(vmax) };
    let mut acc = Series::zero(data, ctx);
    acc.add_term(zero, VCoeff::one())?;
    let h = data.coxeter_number();
    let c = data.central();
    for &m in &pd.exponents {
        let a = VCoeff::mono(1, 2 * m as i32);
        let b = VCoeff::mono(1, 2 * (m as i32 + 1));
        let mut i = 1i64;
        while i * h <= depth as i64 {
            // (1 − a x)/(1 − b x) = 1 + Σ_{n≥1} (bⁿ − a bⁿ⁻¹) xⁿ, x = e^{−i𝐜}
            let mut f = Series::zero(data, ctx);
            f.add_term(zero, VCoeff::one())?;
            let mut bn1 = VCoeff::one();
            let mut n = 1i64;
            while n * i * h <= depth as i64 {
                let bn = &bn1 * &b;
                f.add_term(zero - (n * i) * c, &bn - &(&a * &bn1))?;
                bn1 = bn;
                n += 1;
            }
            acc = acc.mul(&f).truncate_v(vmax);
            i += 1;
        }
    }
    Ok(acc)
}

/// `H₀` on the window `(depth, vmax)`; the result must be a series in `e^{−𝐜}` alone.
pub fn h_zero(g: &WeylGroup, depth: u32, vmax: i32, route: HZeroRoute) -> Result<Series, SphericalError> {
    let h = match route {
        HZeroRoute::Product => product_h_zero(g, depth, vmax)?,
        HZeroRoute::Symmetrizer => {
            let n0 = delta_orbit_sum(g, &g.cartan().zero(), depth, vmax)?;
            let w = poincare_data(g)?.affine_v();
            scale_series(&n0.series, &w.inv()?, vmax)?
        }
    };
    if let Some((cw, _)) = h.terms().find(|(cw, _)| !cw.is_central()) {
        return Err(SphericalError::Invariant(format!("H₀ has a non-central term at {cw}")));
    }
    Ok(h)
}

/// `Φ = (Σ_w Δ^w e^{wλ}) / (W_λ(v²) H₀)`, so that `H_λ/H₀ = q^{⟨ρ,λ⟩}Φ`, modulo `v^{vmax+1}`.
pub fn macdonald_quotient(g: &WeylGroup, lam: &Coweight, depth: u32, vmax: i32) -> Result<Series, SphericalError> {
    let data = g.cartan();
    let stab = g.stabilizer_data(lam)?;
    let Some(counts) = stab.poincare.filter(|_| stab.finite) else {
        // λ ∈ Z𝐜: W^λ = {1} and H_λ = e^λ H₀
        let ctx = TruncationContext { anchor: *lam, depth: Some(depth), vprec: Some(vmax) };
        return Ok(Series::from_terms(data, ctx, [(*lam, VCoeff::one())])?);
    };
    let terms: Vec<(i32, i64)> = counts.iter().enumerate().map(|(i, &k)| (2 * i as i32, k as i64)).collect();
    let w_lam = VCoeff::poly(LPoly::from_terms(&terms));
    let num = delta_orbit_sum(g, lam, depth, vmax)?;
    let h0 = h_zero(g, depth, vmax, HZeroRoute::Symmetrizer)?;
    let h0inv = h0.invert_unit()?;
    let out = scale_series(&num.series, &w_lam.inv()?, vmax)?.mul(&h0inv).truncate_v(vmax);
    Ok(out)
}
