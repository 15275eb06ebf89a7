//! `Σ_{ℓ(w) ≤ L} v^{ℓ(w)} T̃_w = Σ_τ C_τ [τ]`, accumulated shell by shell.
//!
//! With `B(w) = v^{ℓ(w)} T̃_w = Σ_σ B_σ(w)[σ]` and `vT̃_a = c(−a∨)[w_a] + (v² − 1)/(1 − e^{a∨})`
//! (`c` in the Δ normalization) one has, for `ℓ(w w_a) > ℓ(w)`,
//! `B_{σ w_a}(w w_a) += B_σ(w)·c(−σa∨)` and `B_σ(w w_a) += B_σ(w)·(v² − 1)/(1 − e^{σa∨})`.
//! Every factor is expanded in nonpositive exponents with nonnegative powers of `v`, so truncating
//! to depth `D` and `v^{≤ vmax}` is exact on that window, and a shell that vanishes there stays zero.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use affine_cartan::CorootAff;
use affine_series::{delta, delta_w, expand_b, expand_c, Normalization, Series, TruncationContext, VCoeff};
use affine_weyl::{WeylElement, WeylGroup};
use rayon::prelude::*;

use crate::PolyrepError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellAudit {
    pub length: u32,
    pub elements: usize,
    /// `(w, σ)` pairs with `B_σ(w) ≠ 0` in the window.
    pub nonzero_entries: usize,
    pub min_depth: Option<i64>,
    pub min_vdeg: Option<i32>,
}

#[derive(Clone, Debug)]
pub struct ShellExpansion {
    pub shell_max: u32,
    pub depth: u32,
    pub vmax: i32,
    pub coefficients: BTreeMap<WeylElement, Series>,
    pub audit: Vec<ShellAudit>,
    /// Two consecutive shells vanished in the window, so every longer shell does too.
    pub stabilized: bool,
}

impl ShellExpansion {
    pub fn coefficient(&self, tau: &WeylElement) -> Option<&Series> {
        self.coefficients.get(tau)
    }
}

type Row = BTreeMap<WeylElement, Series>;

struct Factors {
    ctx: TruncationContext,
    cache: Mutex<HashMap<(CorootAff, bool), Arc<Series>>>,
}

impl Factors {
    /// `c(−γ)` when `second` is false, `(v² − 1)/(1 − e^γ)` otherwise.
    fn get(&self, g: &WeylGroup, gamma: CorootAff, second: bool) -> Arc<Series> {
        if let Some(s) = self.cache.lock().unwrap().get(&(gamma, second)) {
            return s.clone();
        }
        let data = g.cartan();
        let depth = self.ctx.depth.expect("finite depth");
        let s = if second {
            expand_b(data, &gamma, depth).expect("real coroot").scale(&VCoeff::mono(1, 1))
        } else {
            expand_c(data, &-gamma, depth, Normalization::Delta).expect("real coroot")
        };
        let s = Arc::new(s.with_context(self.ctx).expect("anchored at zero"));
        self.cache.lock().unwrap().insert((gamma, second), s.clone());
        s
    }
}

fn step(g: &WeylGroup, f: &Factors, row: &Row, a: usize) -> Row {
    let sa = g.s(a);
    let av = g.cartan().simple_coroot_aff(a);
    let mut out: Row = BTreeMap::new();
    let mut push = |k: WeylElement, s: Series| {
        if s.is_empty() {
            return;
        }
        match out.get_mut(&k) {
            Some(acc) => *acc = acc.add(&s).expect("shared anchor"),
            None => {
                out.insert(k, s);
            }
        }
    };
    for (sigma, b) in row {
        let gamma = g.act_coroot(sigma, &av);
        push(g.mul(sigma, &sa), b.mul(&f.get(g, gamma, false)));
        push(*sigma, b.mul(&f.get(g, gamma, true)));
    }
    let vmax = f.ctx.vprec.expect("finite v-window");
    out.into_iter().map(|(k, s)| (k, s.truncate_v(vmax))).filter(|(_, s)| !s.is_empty()).collect()
}

fn audit_row(length: u32, rows: &[(WeylElement, Row)]) -> ShellAudit {
    let mut a = ShellAudit { length, elements: rows.len(), nonzero_entries: 0, min_depth: None, min_vdeg: None };
    for (_, row) in rows {
        for s in row.values() {
            a.nonzero_entries += 1;
            for (cw, c) in s.terms() {
                let d = s.depth_of(cw);
                a.min_depth = Some(a.min_depth.map_or(d, |m| m.min(d)));
                if let Some(v) = c.valuation() {
                    a.min_vdeg = Some(a.min_vdeg.map_or(v, |m| m.min(v)));
                }
            }
        }
    }
    a
}

/// Accumulates `C_τ` over shells `0..=shell_budget`, stopping early once two shells vanish.
pub fn symmetrize(g: &WeylGroup, shell_budget: u32, depth: u32, vmax: i32) -> ShellExpansion {
    let data = g.cartan();
    let ctx = TruncationContext { anchor: data.zero(), depth: Some(depth), vprec: Some(vmax) };
    let factors = Factors { ctx, cache: Mutex::new(HashMap::new()) };
    let one = Series::one(data).with_context(ctx).expect("origin");
    let mut prev: Vec<(WeylElement, Row)> = vec![(g.identity(), BTreeMap::from([(g.identity(), one)]))];
    let mut coefficients: BTreeMap<WeylElement, Series> = BTreeMap::new();
    let mut audit = vec![audit_row(0, &prev)];
    let mut empty_run = 0;
    let mut stabilized = false;
    let mut seen_prev: std::collections::HashSet<WeylElement> = std::collections::HashSet::new();
    let mut shell_max = 0;
    for (_, row) in &prev {
        for (k, s) in row {
            coefficients.insert(*k, s.clone());
        }
    }
    for len in 1..=shell_budget {
        // each new w = w' s_a is produced from the first (w', a) in canonical order
        let mut jobs: BTreeMap<WeylElement, (usize, usize)> = BTreeMap::new();
        for (idx, (w, _)) in prev.iter().enumerate() {
            for a in 1..=data.num_simple() {
                if g.is_right_descent(w, a) {
                    continue;
                }
                let x = g.mul(w, &g.s(a));
                if !seen_prev.contains(&x) {
                    jobs.entry(x).or_insert((idx, a));
                }
            }
        }
        let jobs: Vec<(WeylElement, usize, usize)> = jobs.into_iter().map(|(w, (i, a))| (w, i, a)).collect();
        let rows: Vec<(WeylElement, Row)> =
            jobs.par_iter().map(|(w, i, a)| (*w, step(g, &factors, &prev[*i].1, *a))).collect();
        let shell_audit = audit_row(len, &rows);
        let empty = shell_audit.nonzero_entries == 0;
        audit.push(shell_audit);
        for (_, row) in &rows {
            for (k, s) in row {
                match coefficients.get_mut(k) {
                    Some(acc) => *acc = acc.add(s).expect("shared anchor"),
                    None => {
                        coefficients.insert(*k, s.clone());
                    }
                }
            }
        }
        seen_prev = prev.iter().map(|(w, _)| *w).collect();
        prev = rows;
        shell_max = len;
        empty_run = if empty { empty_run + 1 } else { 0 };
        if empty_run >= 2 {
            stabilized = true;
            break;
        }
    }
    coefficients.retain(|_, s| !s.is_empty());
    ShellExpansion { shell_max, depth, vmax, coefficients, audit, stabilized }
}

/// Coefficients of `(Σ_τ C_τ[τ]) ∘ vT̃_a`, for comparison with `v²·C_τ`.
pub fn right_compose_simple(g: &WeylGroup, shells: &ShellExpansion, a: usize) -> BTreeMap<WeylElement, Series> {
    let data = g.cartan();
    let ctx = TruncationContext { anchor: data.zero(), depth: Some(shells.depth), vprec: Some(shells.vmax) };
    let factors = Factors { ctx, cache: Mutex::new(HashMap::new()) };
    step(g, &factors, &shells.coefficients, a)
}

/// The outcome of checking `C_τ·Δ = C_1·Δ^τ`.
#[derive(Clone, Debug)]
pub struct Proportionality {
    /// `𝔪 = C_1·Δ⁻¹`.
    pub factor: Series,
    pub depth: u32,
    pub vmax: i32,
    pub checked: usize,
}

pub fn check_proportionality(
    g: &WeylGroup,
    shells: &ShellExpansion,
    max_len: u32,
) -> Result<Proportionality, PolyrepError> {
    if !shells.stabilized {
        return Err(PolyrepError::NotStabilized(shells.shell_max));
    }
    let data = g.cartan();
    let (depth, vmax) = (shells.depth, shells.vmax);
    let ctx = TruncationContext { anchor: data.zero(), depth: Some(depth), vprec: Some(vmax) };
    let zero = Series::zero(data, ctx);
    let gamma = shells.coefficient(&g.identity()).cloned().unwrap_or_else(|| zero.clone());
    let dl = delta(g, depth).with_context(ctx)?;
    let mut checked = 0;
    for tau in g.bfs_enumerate(max_len).concat() {
        let c = shells.coefficient(&tau).cloned().unwrap_or_else(|| zero.clone());
        let lhs = c.mul(&dl);
        let rhs = gamma.mul(&delta_w(g, &tau, depth));
        if let Some(cw) = lhs.disagreements(&rhs, Some(depth), Some(vmax)).first() {
            return Err(PolyrepError::Mismatch { tau, cw: *cw });
        }
        checked += 1;
    }
    let factor = gamma.mul(&dl.invert_unit()?);
    Ok(Proportionality { factor, depth, vmax, checked })
}
