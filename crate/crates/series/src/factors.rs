//! Geometric expansions of the rank-one factors and the products `Δ^w`.

use affine_cartan::{AffineCartanData, CorootAff};
use affine_weyl::{WeylElement, WeylGroup};

use crate::{LPoly, Series, SeriesError, TruncationContext, VCoeff};

/// Which rank-one factor family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Normalization {
    /// `c(γ) = (1 − v²e^{−γ})/(1 − e^{−γ})`.
    Delta,
    /// `c(X) = (vX − v⁻¹)/(X − 1)` with `X = e^γ`, the Demazure–Lusztig normalization.
    Hecke,
}

fn v(k: i64, d: i32) -> VCoeff {
    VCoeff::mono(k, d)
}

fn binom(a: (i64, i32), b: (i64, i32)) -> VCoeff {
    VCoeff::poly(LPoly::from_terms(&[(a.1, a.0), (b.1, b.0)]))
}

/// `p0 + Σ_{j≥1} (p0 + p1) e^{−jβ}` for a positive `β`: the expansion of
/// `(p0 + p1 e^{−β})/(1 − e^{−β})`, checked by multiplying back.
pub fn expand_geometric(
    data: &AffineCartanData,
    beta: &CorootAff,
    p0: &VCoeff,
    p1: &VCoeff,
    depth: u32,
) -> Result<Series, SeriesError> {
    if beta.is_zero() {
        return Err(SeriesError::ZeroCoroot);
    }
    if !data.is_positive_coroot(beta) {
        return Err(SeriesError::NotCoroot(*beta));
    }
    let zero = data.zero();
    let step = beta.to_coweight();
    let ht = data.coroot_height(beta);
    let ctx = TruncationContext::with_depth(zero, depth);
    let mut out = Series::zero(data, ctx);
    out.add_term(zero, p0.clone())?;
    let tail = p0 + p1;
    let mut j = 1i64;
    while j * ht <= depth as i64 {
        out.add_term(zero - j * step, tail.clone())?;
        j += 1;
    }
    let mut one_minus = Series::zero(data, ctx);
    one_minus.add_term(zero, VCoeff::one())?;
    one_minus.add_term(-step, VCoeff::int(-1))?;
    let mut target = Series::zero(data, ctx);
    target.add_term(zero, p0.clone())?;
    target.add_term(-step, p1.clone())?;
    if !one_minus.mul(&out).agrees_with(&target, Some(depth), None) {
        return Err(SeriesError::Certificate(format!("{beta:?}")));
    }
    Ok(out)
}

fn checked(data: &AffineCartanData, gamma: &CorootAff) -> Result<bool, SeriesError> {
    if gamma.is_zero() {
        return Err(SeriesError::ZeroCoroot);
    }
    if data.multiplicity(gamma).is_err() {
        return Err(SeriesError::NotCoroot(*gamma));
    }
    Ok(data.is_positive_coroot(gamma))
}

fn expand_signed(
    data: &AffineCartanData,
    gamma: &CorootAff,
    depth: u32,
    pos: (VCoeff, VCoeff),
    neg: (VCoeff, VCoeff),
) -> Result<Series, SeriesError> {
    if checked(data, gamma)? {
        expand_geometric(data, gamma, &pos.0, &pos.1, depth)
    } else {
        expand_geometric(data, &-*gamma, &neg.0, &neg.1, depth)
    }
}

/// The factor `c(γ)` expanded in negative powers of `|γ|`.
pub fn expand_c(
    data: &AffineCartanData,
    gamma: &CorootAff,
    depth: u32,
    norm: Normalization,
) -> Result<Series, SeriesError> {
    match norm {
        // (1 − v²x)/(1 − x); for γ < 0 rewrite as (v² − x)/(1 − x), x = e^{−|γ|}.
        Normalization::Delta => expand_signed(data, gamma, depth, (v(1, 0), v(-1, 2)), (v(1, 2), v(-1, 0))),
        // (v − v⁻¹x)/(1 − x) for γ > 0, (v⁻¹ − v x)/(1 − x) for γ < 0.
        Normalization::Hecke => expand_signed(data, gamma, depth, (v(1, 1), v(-1, -1)), (v(1, -1), v(-1, 1))),
    }
}

/// The factor `b(X) = (v − v⁻¹)/(1 − X)`, `X = e^γ`, expanded in negative powers of `|γ|`.
pub fn expand_b(data: &AffineCartanData, gamma: &CorootAff, depth: u32) -> Result<Series, SeriesError> {
    expand_signed(
        data,
        gamma,
        depth,
        (VCoeff::zero(), binom((1, -1), (-1, 1))),
        (binom((1, 1), (-1, -1)), VCoeff::zero()),
    )
}

/// What happened to each factor of a `Δ^w` product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorLog {
    pub expanded: usize,
    /// Real factors too deep to matter, replaced by their constant term.
    pub inert_positive: usize,
    pub inert_negative: usize,
    pub imaginary: usize,
}

/// Positive real coroots `β` of height `≤ depth` with `w⁻¹β < 0`.
pub fn small_inversions(g: &WeylGroup, w: &WeylElement, depth: u32) -> Vec<CorootAff> {
    let data = g.cartan();
    let winv = g.inverse(w);
    data.positive_real_coroots(depth as i64)
        .into_iter()
        .filter(|b| !data.is_positive_coroot(&g.act_coroot(&winv, b)))
        .collect()
}

/// `Δ^w = ∏_{a>0} c(w a∨)^{m(a∨)}` to the given depth, in the `Delta` normalization.
pub fn delta_w(g: &WeylGroup, w: &WeylElement, depth: u32) -> Series {
    delta_w_logged(g, w, depth).0
}

pub fn delta(g: &WeylGroup, depth: u32) -> Series {
    delta_w(g, &g.identity(), depth)
}

pub fn delta_w_logged(g: &WeylGroup, w: &WeylElement, depth: u32) -> (Series, FactorLog) {
    let data = g.cartan();
    let winv = g.inverse(w);
    let mut log = FactorLog::default();
    let mut acc = Series::zero(data, TruncationContext::with_depth(data.zero(), depth));
    acc.add_term(data.zero(), VCoeff::one()).expect("origin");
    let mut small = 0u32;
    for beta in data.positive_real_coroots(depth as i64) {
        let inverted = !data.is_positive_coroot(&g.act_coroot(&winv, &beta));
        let gamma = if inverted {
            small += 1;
            -beta
        } else {
            beta
        };
        let f = expand_c(data, &gamma, depth, Normalization::Delta).expect("real coroot");
        acc = acc.mul(&f);
        log.expanded += 1;
    }
    let len = g.length(w);
    log.inert_negative = (len - small) as usize;
    let h = data.coxeter_number();
    let ell = data.rank();
    let mut n = 1i64;
    while n * h <= depth as i64 {
        let c = CorootAff::new(&vec![0; ell], n);
        let f = expand_c(data, &c, depth, Normalization::Delta).expect("imaginary coroot");
        for _ in 0..ell {
            acc = acc.mul(&f);
        }
        log.imaginary += 1;
        n += 1;
    }
    let inert = VCoeff::mono(1, 2 * (len - small) as i32);
    if !inert.is_one() {
        acc = acc.scale(&inert);
    }
    (acc, log)
}

