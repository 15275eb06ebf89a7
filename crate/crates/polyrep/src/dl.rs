//! `T̃_a f = c(a∨)·(w_a f) + b(a∨)·f` with `c(X) = (vX − v⁻¹)/(X − 1)`, `b(X) = (v − v⁻¹)/(1 − X)`.

use std::collections::BTreeMap;

use affine_cartan::Coweight;
use affine_series::{expand_b, expand_c, Normalization, Series, VCoeff};
use affine_weyl::{WeylElement, WeylGroup};

use crate::PolyrepError;

/// An operator image together with the depth up to which it can be trusted.
#[derive(Clone, Debug, PartialEq)]
pub struct Applied {
    pub series: Series,
    /// `None` when the input was exact in depth (then so is the output).
    pub safe_depth: Option<u32>,
}

/// `T̃_a e^μ` as an exact finite sum: both geometric tails are expanded one layer past the
/// shorter string and the cancellation is checked there.
fn apply_to_monomial(g: &WeylGroup, a: usize, mu: &Coweight) -> Result<BTreeMap<Coweight, VCoeff>, PolyrepError> {
    let data = g.cartan();
    let av = data.simple_coroot(a);
    let ac = data.simple_coroot_aff(a);
    let k = data.simple_pairing(a, mu);
    let smu = *mu - k * av;
    let bottom = if k >= 0 { smu } else { *mu } - av;
    let nc = (data.rho_pairing(&smu) - data.rho_pairing(&bottom)) as u32;
    let nb = (data.rho_pairing(mu) - data.rho_pairing(&bottom)) as u32;
    let c = expand_c(data, &ac, nc, Normalization::Hecke)?.shift(smu);
    let b = expand_b(data, &ac, nb)?.shift(*mu);
    let mut out: BTreeMap<Coweight, VCoeff> = BTreeMap::new();
    for (cw, coeff) in c.terms().chain(b.terms()) {
        let e = out.entry(*cw).or_insert_with(VCoeff::zero);
        *e = &*e + coeff;
    }
    let tail = out.remove(&bottom).unwrap_or_else(VCoeff::zero);
    if !tail.is_zero() {
        return Err(PolyrepError::Tail(bottom));
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn apply_trusted(g: &WeylGroup, a: usize, f: &Series, trusted: Option<u32>) -> Result<Applied, PolyrepError> {
    let data = g.cartan();
    let mut out = Series::zero_with_gauge(f.gauge(), f.context());
    let mut loss = 0i64;
    for (mu, c) in f.sorted_terms() {
        if !data.in_tits_cone(&mu) {
            return Err(affine_series::SeriesError::OutsideTitsCone(mu).into());
        }
        loss = loss.max(-data.simple_pairing(a, &mu));
        for (nu, k) in apply_to_monomial(g, a, &mu)? {
            out.add_term(nu, &c * &k)?;
        }
    }
    let safe_depth = trusted.map(|t| (t as i64 - loss).max(0) as u32);
    Ok(Applied { series: out, safe_depth })
}

pub fn dl_apply(g: &WeylGroup, a: usize, f: &Series) -> Result<Applied, PolyrepError> {
    g.simple_reflection(a)?;
    apply_trusted(g, a, f, f.depth())
}

/// `T̃_w = T̃_{a_1} ⋯ T̃_{a_n}` along the canonical reduced word `w = w_{a_1} ⋯ w_{a_n}`.
pub fn dl_word(g: &WeylGroup, w: &WeylElement, f: &Series) -> Result<Applied, PolyrepError> {
    dl_along(g, &g.reduced_word(w), f)
}

/// The same along an arbitrary word (reduced or not).
pub fn dl_along(g: &WeylGroup, word: &[usize], f: &Series) -> Result<Applied, PolyrepError> {
    let mut cur = Applied { series: f.clone(), safe_depth: f.depth() };
    for &a in word.iter().rev() {
        g.simple_reflection(a)?;
        cur = apply_trusted(g, a, &cur.series, cur.safe_depth)?;
    }
    Ok(cur)
}
