//! The finite sets `x𝓡₊⁺ ∩ 𝓡₋` and `x𝓡₋⁻ ∩ 𝓡₊` for `x ∈ 𝒲_X`.
//!
//! Write `x = w π^μ` with `μ` of level `r`. A source `a + kπ ∈ 𝓡₊⁺` lands in `𝓡₋` only if
//! `⟨μ, a⟩ + k ≤ 0`, so `⟨μ, a⟩ ≤ 0`. For `a = β + mδ` that gives `m ≤ −⟨μ, β⟩/r` when
//! `r > 0`, and then `0 ≤ k ≤ −⟨μ, a⟩`. For `μ ∈ Z𝐜` the pairing vanishes and only the
//! roots inverted by `w` survive, with `k = 0`. The second set is the negative of the first.

use std::collections::BTreeSet;

use affine_cartan::RootAff;
use affine_weyl::{ExtendedElement, WeylGroup};

use crate::{act_left, classify, right_translation, AffRootsError, AffinizedRoot, Quadrant};

/// Bounds of a scan box: `|m| ≤ delta_level` for `a = β + mδ`, `|k| ≤ pi_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cutoff {
    pub delta_level: i64,
    pub pi_level: i64,
}

impl Cutoff {
    pub fn doubled(&self) -> Cutoff {
        Cutoff { delta_level: (2 * self.delta_level).max(1), pi_level: (2 * self.pi_level).max(1) }
    }
}

/// Pairs `(source, image)`, sorted by source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSets {
    /// Sources in `𝓡₊⁺` with image in `𝓡₋`.
    pub positive_to_negative: Vec<(AffinizedRoot, AffinizedRoot)>,
    /// Sources in `𝓡₋⁻` with image in `𝓡₊`.
    pub negative_to_positive: Vec<(AffinizedRoot, AffinizedRoot)>,
    /// Smallest box containing every source.
    pub cutoff: Cutoff,
}

impl InversionSets {
    pub fn sizes(&self) -> (usize, usize) {
        (self.positive_to_negative.len(), self.negative_to_positive.len())
    }
}

fn hits(g: &WeylGroup, x: &ExtendedElement, alpha: &AffinizedRoot) -> Option<(AffinizedRoot, AffinizedRoot)> {
    let image = act_left(g, x, alpha);
    let src = classify(g, alpha);
    let dst = classify(g, &image).lower_positive();
    let keep = (src == Quadrant::PlusPlus && !dst) || (src == Quadrant::MinusMinus && dst);
    keep.then_some((*alpha, image))
}

/// Positive roots `a` with `w a < 0`, read off a reduced word.
fn inverted_roots(g: &WeylGroup, x: &ExtendedElement) -> Vec<RootAff> {
    let data = g.cartan();
    let word = g.reduced_word(&x.w);
    let mut out = Vec::with_capacity(word.len());
    // w = s_{i1}…s_{in}: the inverted roots are s_{in}…s_{i(j+1)} a_{ij}.
    for j in 0..word.len() {
        let mut r = data.simple_root(word[j]);
        for &i in &word[j + 1..] {
            r = data.reflect_root(i, &r);
        }
        out.push(r);
    }
    out
}

fn finish(
    g: &WeylGroup,
    x: &ExtendedElement,
    candidates: Vec<AffinizedRoot>,
) -> InversionSets {
    let mut first = BTreeSet::new();
    let mut second = BTreeSet::new();
    let mut cut = Cutoff { delta_level: 0, pi_level: 0 };
    for c in candidates {
        if let Some(p) = hits(g, x, &c) {
            cut.delta_level = cut.delta_level.max(c.root.m.abs());
            cut.pi_level = cut.pi_level.max(c.k.abs());
            first.insert(p);
        }
        if let Some(p) = hits(g, x, &-c) {
            second.insert(p);
        }
    }
    InversionSets {
        positive_to_negative: first.into_iter().collect(),
        negative_to_positive: second.into_iter().collect(),
        cutoff: cut,
    }
}

/// Exact enumeration for `x ∈ 𝒲_X`, closed by a scan one layer past the derived bounds.
pub fn inversion_sets(g: &WeylGroup, x: &ExtendedElement) -> Result<InversionSets, AffRootsError> {
    let data = g.cartan();
    let mu = right_translation(g, x);
    if !data.in_tits_cone(&mu) {
        return Err(AffRootsError::NotInTitsCone(mu));
    }
    if mu.d == 0 {
        let cands = inverted_roots(g, x).into_iter().map(|root| AffinizedRoot { root, k: 0 }).collect();
        return Ok(finish(g, x, cands));
    }
    let r = mu.d;
    let mut cands = Vec::new();
    let mut beyond = Vec::new();
    for beta in data.finite_roots() {
        let p = data.pairing(&RootAff::new(&beta, 0), &mu);
        let m0 = if beta.iter().any(|&b| b > 0) { 0 } else { 1 };
        let m1 = (-p).div_euclid(r);
        for m in m0..=m1 {
            let root = RootAff::new(&beta, m);
            let s = p + m * r;
            for k in 0..=-s {
                cands.push(AffinizedRoot { root, k });
            }
            beyond.push(AffinizedRoot { root, k: 1 - s });
        }
        let root = RootAff::new(&beta, m0.max(m1 + 1));
        let s = p + root.m * r;
        for k in 0..=(1 - s).max(1) {
            beyond.push(AffinizedRoot { root, k });
        }
    }
    for b in beyond {
        if hits(g, x, &b).is_some() {
            return Err(AffRootsError::Incomplete(b));
        }
    }
    Ok(finish(g, x, cands))
}

/// Brute-force scan of every `a + kπ` inside the box.
pub fn scan_inversion_sets(g: &WeylGroup, x: &ExtendedElement, cutoff: Cutoff) -> InversionSets {
    let mut first = BTreeSet::new();
    let mut second = BTreeSet::new();
    for beta in g.cartan().finite_roots() {
        for m in -cutoff.delta_level..=cutoff.delta_level {
            let root = RootAff::new(&beta, m);
            for k in -cutoff.pi_level..=cutoff.pi_level {
                let alpha = AffinizedRoot { root, k };
                if let Some(p) = hits(g, x, &alpha) {
                    if classify(g, &alpha) == Quadrant::PlusPlus {
                        first.insert(p);
                    } else {
                        second.insert(p);
                    }
                }
            }
        }
    }
    InversionSets {
        positive_to_negative: first.into_iter().collect(),
        negative_to_positive: second.into_iter().collect(),
        cutoff,
    }
}
