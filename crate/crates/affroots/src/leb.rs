//! Chain search for `y ≤_B x`: `y = w_{α_k}⋯w_{α_1}x` with each `α_j` negative for the
//! element it is applied to.
//!
//! Roots are drawn from a finite box. Since `w_α = w_{−α}` and exactly one of `±α` is
//! negative for any given element, every found step can be walked back; the probe reports
//! such pairs as they come.

use std::collections::BTreeMap;

use affine_cartan::RootAff;
use affine_weyl::{ExtendedElement, WeylGroup};
use rayon::prelude::*;

use crate::{is_negative_for, right_translation, reflection_element, AffRootsError, AffinizedRoot};

/// Roots `β + mδ + nπ` with `|m| ≤ delta_level` and `|n| ≤ pi_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LebBound {
    pub delta_level: i64,
    pub pi_level: i64,
}

#[derive(Clone, Debug)]
pub struct LebSearch {
    pub start: ExtendedElement,
    /// Every element found, with the chain `α_1, …, α_k` that reaches it.
    pub found: BTreeMap<ExtendedElement, Vec<AffinizedRoot>>,
}

fn candidates(g: &WeylGroup, bound: LebBound) -> Result<Vec<(AffinizedRoot, ExtendedElement)>, AffRootsError> {
    let mut out = Vec::new();
    for beta in g.cartan().finite_roots() {
        for m in -bound.delta_level..=bound.delta_level {
            let root = RootAff::new(&beta, m);
            for k in -bound.pi_level..=bound.pi_level {
                let alpha = AffinizedRoot { root, k };
                out.push((alpha, reflection_element(g, &alpha)?));
            }
        }
    }
    Ok(out)
}

pub fn leb_search(
    g: &WeylGroup,
    x: &ExtendedElement,
    max_chain: usize,
    bound: LebBound,
) -> Result<LebSearch, AffRootsError> {
    let mu = right_translation(g, x);
    if !g.cartan().in_tits_cone(&mu) {
        return Err(AffRootsError::NotInTitsCone(mu));
    }
    let cands = candidates(g, bound)?;
    let mut found = BTreeMap::new();
    found.insert(*x, Vec::new());
    let mut frontier = vec![*x];
    for _ in 0..max_chain {
        let steps: Vec<Vec<(ExtendedElement, AffinizedRoot)>> = frontier
            .par_iter()
            .map(|z| {
                cands
                    .iter()
                    .filter(|(alpha, _)| is_negative_for(g, alpha, z))
                    .map(|(alpha, wa)| (g.ext_mul(wa, z), *alpha))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (z, ys) in frontier.iter().zip(steps) {
            for (y, alpha) in ys {
                if !found.contains_key(&y) {
                    let mut chain = found[z].clone();
                    chain.push(alpha);
                    found.insert(y, chain);
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(LebSearch { start: *x, found })
}

/// Checks that `chain` is admissible from `x` and ends at `y`.
pub fn replay_chain(g: &WeylGroup, x: &ExtendedElement, y: &ExtendedElement, chain: &[AffinizedRoot]) -> bool {
    let mut cur = *x;
    for alpha in chain {
        if !is_negative_for(g, alpha, &cur) {
            return false;
        }
        let Ok(wa) = reflection_element(g, alpha) else { return false };
        cur = g.ext_mul(&wa, &cur);
    }
    cur == *y
}

/// An admissible chain from `y` back to `x`, if the reversed steps are admissible.
pub fn reverse_chain(
    g: &WeylGroup,
    x: &ExtendedElement,
    y: &ExtendedElement,
    chain: &[AffinizedRoot],
) -> Option<Vec<AffinizedRoot>> {
    let mut cur = *y;
    let mut back = Vec::with_capacity(chain.len());
    for alpha in chain.iter().rev() {
        let beta = if is_negative_for(g, alpha, &cur) { *alpha } else { -*alpha };
        if !is_negative_for(g, &beta, &cur) {
            return None;
        }
        cur = g.ext_mul(&reflection_element(g, &beta).ok()?, &cur);
        back.push(beta);
    }
    (cur == *x).then_some(back)
}

/// Observations on a search, recorded as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LebProbe {
    pub elements: usize,
    /// Found `y` with `y ⪯ x`.
    pub below_in_preceq: usize,
    /// Found `y ≠ x` for which `x ≤_B y` is witnessed as well.
    pub antisymmetry_violations: Vec<ExtendedElement>,
}

pub fn leb_probe(g: &WeylGroup, search: &LebSearch) -> LebProbe {
    let x = &search.start;
    let mut below = 0;
    let mut violations = Vec::new();
    for (y, chain) in &search.found {
        if g.preceq(y, x) {
            below += 1;
        }
        if y != x && reverse_chain(g, x, y, chain).is_some() {
            violations.push(*y);
        }
    }
    LebProbe { elements: search.found.len(), below_in_preceq: below, antisymmetry_violations: violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use affine_cartan::Coweight;

    #[test]
    fn empty_chain_finds_only_the_start() {
        let g = WeylGroup::from_name("A1").unwrap();
        let x = g.extended(Coweight::new(0, &[1], 1), g.s(1));
        let s = leb_search(&g, &x, 0, LebBound { delta_level: 1, pi_level: 1 }).unwrap();
        assert_eq!(s.found.len(), 1);
        assert!(s.found[&x].is_empty());
    }
}
