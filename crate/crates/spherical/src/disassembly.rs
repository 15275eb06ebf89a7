//! `Σ_{w ∈ W^λ} J_w(λ)` accumulated shell by shell inside a depth window.

use affine_cartan::Coweight;
use affine_series::{Series, TruncationContext};
use affine_weyl::WeylGroup;

use crate::jfun::{j_function, JRoute, JTable};
use crate::SphericalError;

/// What one shell of `W^λ` contributed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellReport {
    pub length: u32,
    pub elements: usize,
    /// Terms of the shell's `J_w` landing inside the window.
    pub window_terms: usize,
    /// Smallest `⟨ρ, λ − μ⟩` over all terms of the shell.
    pub min_depth: Option<i64>,
    /// Largest `n` with `μ ≤ λ − n𝐜`, minimized over the shell's terms.
    pub min_imaginary_depth: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Disassembly {
    pub lambda: Coweight,
    pub depth: u32,
    pub series: Series,
    pub shells: Vec<ShellReport>,
    /// Length of the last shell computed.
    pub shells_used: u32,
}

fn imaginary_depth(g: &WeylGroup, lam: &Coweight, mu: &Coweight) -> i64 {
    let data = g.cartan();
    let coords = data.simple_coroot_coords(&(*lam - *mu)).expect("level zero difference");
    let mut c: Vec<i64> = data.theta().to_vec();
    c.push(1);
    coords.iter().zip(&c).map(|(x, t)| x.div_euclid(*t)).min().expect("nonempty")
}

/// Sum the `J_w(λ)` over `W^λ` until two consecutive shells put nothing into the window.
pub fn disassemble(
    g: &WeylGroup,
    lam: &Coweight,
    depth: u32,
    shell_budget: u32,
    route: JRoute,
) -> Result<Disassembly, SphericalError> {
    let data = g.cartan();
    if !data.is_dominant(lam) {
        return Err(SphericalError::NotDominant(*lam));
    }
    let mut total = Series::zero(data, TruncationContext::with_depth(*lam, depth));
    let reps = g.minimal_coset_reps(lam, shell_budget)?;
    let mut table = JTable::new(g, *lam)?;
    let mut shells = Vec::new();
    let mut empty_run = 0;
    for (len, shell) in reps.iter().enumerate() {
        let len = len as u32;
        let js: Vec<Series> = match route {
            JRoute::Recursion => {
                table.extend(shell)?;
                let js = shell.iter().map(|w| table.cached(w).expect("just computed").clone()).collect();
                if len > 0 {
                    table.forget_below(len);
                }
                js
            }
            JRoute::Operator => {
                use rayon::prelude::*;
                shell.par_iter().map(|w| j_function(g, w, lam, JRoute::Operator)).collect::<Result<_, _>>()?
            }
        };
        let mut report = ShellReport {
            length: len,
            elements: shell.len(),
            window_terms: 0,
            min_depth: None,
            min_imaginary_depth: None,
        };
        for j in &js {
            for (mu, c) in j.terms() {
                let d = total.depth_of(mu);
                let n = imaginary_depth(g, lam, mu);
                report.min_depth = Some(report.min_depth.map_or(d, |m| m.min(d)));
                report.min_imaginary_depth = Some(report.min_imaginary_depth.map_or(n, |m| m.min(n)));
                if d <= depth as i64 {
                    report.window_terms += 1;
                    total.add_term(*mu, c.clone())?;
                }
            }
        }
        let empty = report.window_terms == 0;
        shells.push(report);
        empty_run = if empty { empty_run + 1 } else { 0 };
        if empty_run == 2 {
            return Ok(Disassembly { lambda: *lam, depth, series: total, shells, shells_used: len });
        }
    }
    if reps.len() <= shell_budget as usize {
        // W^λ ran out: the sum is finite and complete
        let used = reps.len().saturating_sub(1) as u32;
        return Ok(Disassembly { lambda: *lam, depth, series: total, shells, shells_used: used });
    }
    Err(SphericalError::NotStabilized { budget: shell_budget, audit: shells })
}
