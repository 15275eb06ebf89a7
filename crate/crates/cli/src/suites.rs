//! Identity suites run by `affine identities`.

use affine_cartan::{Coweight, MAX_RANK};
use affine_hecke::{HeckeAlgebra, HeckeElement, ThetaExpr, ThetaPolicy};
use affine_polyrep::{check_proportionality, dl_apply, dl_word, symmetrize};
use affine_series::{expand_b, expand_c, LPoly, Normalization, Series, TruncationContext, VCoeff};
use affine_spherical::{h_zero, HZeroRoute};
use affine_weyl::WeylGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::{CliError, Outcome};

pub const SUITES: [&str; 8] = ["cb", "quadratic", "assoc", "bernstein", "hplus", "proportionality", "h0", "theta"];

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub window: Value,
}

impl SuiteReport {
    fn new(name: &'static str, window: Value) -> Self {
        SuiteReport { name, checks: 0, failures: Vec::new(), window }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn to_json(&self) -> Value {
        json!({"suite": self.name, "pass": self.pass(), "checks": self.checks, "failures": self.failures, "window": self.window})
    }
}

fn rng(cfg: &RunConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_coweight(r: &mut ChaCha8Rng, rank: usize, c: (i64, i64), fin: (i64, i64), d: (i64, i64)) -> Coweight {
    let mut f = [0i64; MAX_RANK];
    for x in f.iter_mut().take(rank) {
        *x = r.gen_range(fin.0..=fin.1);
    }
    Coweight::new(r.gen_range(c.0..=c.1), &f[..rank], r.gen_range(d.0..=d.1))
}

/// `c(X) + c(X⁻¹) = v + v⁻¹` and `c(X)c(X⁻¹) = 1 + b(X)b(X⁻¹)` on positive coroots.
pub fn cb(g: &WeylGroup, depth: u32) -> Result<SuiteReport, CliError> {
    let data = g.cartan();
    let mut rep = SuiteReport::new("cb", json!({"depth": depth}));
    let err = |e: affine_series::SeriesError| CliError::Mismatch(e.to_string());
    let vsum = Series::monomial(data, data.zero(), VCoeff::poly(LPoly::from_terms(&[(-1, 1), (1, 1)])));
    for gamma in data.positive_real_coroots(depth as i64) {
        let c = expand_c(data, &gamma, depth, Normalization::Hecke).map_err(err)?;
        let ci = expand_c(data, &-gamma, depth, Normalization::Hecke).map_err(err)?;
        let b = expand_b(data, &gamma, depth).map_err(err)?;
        let bi = expand_b(data, &-gamma, depth).map_err(err)?;
        rep.check(c.add(&ci).map_err(err)?.agrees_with(&vsum, Some(depth), None), || format!("c + c⁻ at {gamma:?}"));
        let lhs = c.mul(&ci);
        let one = Series::one(data).with_context(lhs.context()).map_err(err)?;
        let rhs = b.mul(&bi).add(&one).map_err(err)?;
        rep.check(lhs.agrees_with(&rhs, Some(depth), None), || format!("c·c⁻ at {gamma:?}"));
    }
    Ok(rep)
}

/// `(T̃_a + v⁻¹)(T̃_a − v) = 0` on random exact series, and `T̃_w e^λ = v^{ℓ(w)} e^λ` on `W_λ`.
pub fn quadratic(g: &WeylGroup, samples: usize, r: &mut ChaCha8Rng) -> Result<SuiteReport, CliError> {
    let data = g.cartan();
    let l = data.rank();
    let mut rep = SuiteReport::new("quadratic", json!({"exact": true}));
    let err = |e: affine_polyrep::PolyrepError| CliError::Mismatch(e.to_string());
    let anchor = Coweight::new(30, &vec![0; l], 2);
    let k = VCoeff::poly(LPoly::from_terms(&[(-1, 1), (1, -1)]));
    for _ in 0..samples {
        let n = r.gen_range(1..=3);
        let terms: Vec<(Coweight, VCoeff)> = (0..n)
            .map(|_| {
                let cw = random_coweight(r, l, (0, 0), (-2, 2), (2, 2));
                (cw, VCoeff::mono(r.gen_range(-3..=3), r.gen_range(-2..=2)))
            })
            .collect();
        let f = Series::from_terms(data, TruncationContext::exact(anchor), terms)
            .map_err(|e| CliError::Mismatch(e.to_string()))?;
        let a = r.gen_range(1..=data.num_simple());
        let tf = dl_apply(g, a, &f).map_err(err)?.series;
        let ttf = dl_apply(g, a, &tf).map_err(err)?.series;
        let zero = ttf.add_scaled(&tf, &k).and_then(|s| s.sub(&f)).map_err(|e| CliError::Mismatch(e.to_string()))?;
        rep.check(zero.is_empty(), || format!("a = {a}, f = {:?}", f.sorted_terms()));
    }
    let lam = Coweight::new(0, &vec![0; l], 2);
    let f = Series::monomial(data, lam, VCoeff::one());
    let stab = g.stabilizer_data(&lam).map_err(|e| CliError::Mismatch(e.to_string()))?;
    for w in g.bfs_enumerate(3).concat() {
        if g.reduced_word(&w).iter().all(|a| stab.generators.contains(a)) {
            let img = dl_word(g, &w, &f).map_err(err)?.series;
            rep.check(img == f.scale(&VCoeff::mono(1, g.length(&w) as i32)), || format!("T̃_w e^λ for w = {w:?}"));
        }
    }
    Ok(rep)
}

pub fn random_hecke(h: &HeckeAlgebra, r: &mut ChaCha8Rng, positive: bool) -> HeckeElement {
    let g = h.group();
    let l = g.rank();
    let elems = g.bfs_enumerate(2).concat();
    let mut x = HeckeElement::zero();
    for _ in 0..r.gen_range(1..=2) {
        let d = r.gen_range(if positive { 0 } else { -1 }..=1);
        let mut lam = random_coweight(r, l, (-1, 1), (-1, 1), (d, d));
        if positive && d == 0 {
            lam = lam.c * h.cartan().central();
        }
        x.add_term(lam, elems[r.gen_range(0..elems.len())], VCoeff::mono(r.gen_range(-2..=2), r.gen_range(-2..=2)));
    }
    x
}

pub fn assoc(h: &HeckeAlgebra, samples: usize, r: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("assoc", json!({"exact": true}));
    for _ in 0..samples {
        let (x, y, z) = (random_hecke(h, r, false), random_hecke(h, r, false), random_hecke(h, r, false));
        rep.check(h.mul(&h.mul(&x, &y), &z) == h.mul(&x, &h.mul(&y, &z)), || format!("{x:?} · {y:?} · {z:?}"));
    }
    rep
}

/// `T_a Θ_λ − Θ_{w_a λ} T_a` against the three-case table, on a box of coweights.
pub fn bernstein(h: &HeckeAlgebra) -> SuiteReport {
    let data = h.cartan();
    let l = data.rank();
    let mut rep = SuiteReport::new("bernstein", json!({"exact": true}));
    let id = h.group().identity();
    let qm1 = VCoeff::poly(LPoly::from_terms(&[(-2, 1), (0, -1)]));
    let mut seen = [false; 3];
    let box_fin: Vec<Vec<i64>> = (0..(5i64.pow(l as u32)))
        .map(|mut n| {
            (0..l)
                .map(|_| {
                    let x = n % 5 - 2;
                    n /= 5;
                    x
                })
                .collect()
        })
        .collect();
    for a in 1..=data.num_simple() {
        let av = data.simple_coroot(a);
        for d in 0..=2 {
            for fin in &box_fin {
                let lam = Coweight::new(0, fin, d);
                let k = data.simple_pairing(a, &lam);
                let s = data.reflect_coweight(a, &lam);
                let lhs = h.mul(&h.t_simple(a), &h.theta(lam)).sub(&h.mul(&h.theta(s), &h.t_simple(a)));
                let mut rhs = HeckeElement::zero();
                if k > 0 {
                    for j in 0..k {
                        rhs.add_term(lam - j * av, id, qm1.clone());
                    }
                } else if k < 0 {
                    let m = data.simple_pairing(a, &s);
                    for j in 0..m {
                        rhs.add_term(s - j * av, id, &VCoeff::zero() - &qm1);
                    }
                }
                seen[(k.signum() + 1) as usize] = true;
                rep.check(lhs == rhs, || format!("a = {a}, λ = {lam}"));
            }
        }
    }
    rep.check(seen.iter().all(|&b| b), || "not every case of the table was reached".into());
    rep
}

pub fn hplus(h: &HeckeAlgebra, samples: usize, r: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("hplus", json!({"exact": true}));
    for _ in 0..samples {
        let (x, y) = (random_hecke(h, r, true), random_hecke(h, r, true));
        let ok = h.is_in_h_plus(&x) && h.is_in_h_plus(&y) && h.is_in_h_plus(&h.mul(&x, &y));
        rep.check(ok, || format!("{x:?} · {y:?}"));
    }
    rep
}

/// `C_τ Δ = C_1 Δ^τ` for `ℓ(τ) ≤ 4`, with `𝔪 = C_1 Δ⁻¹` central and `W`-invariant.
pub fn proportionality(g: &WeylGroup, depth: u32, vmax: i32, shells: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("proportionality", json!({"depth": depth, "vmax": vmax, "max_length": 4}));
    let s = symmetrize(g, shells, depth, vmax);
    rep.check(s.stabilized, || format!("symmetrizer not stabilized within {shells} shells"));
    if !s.stabilized {
        return rep;
    }
    match check_proportionality(g, &s, 4) {
        Err(e) => rep.check(false, || e.to_string()),
        Ok(p) => {
            rep.checks += p.checked;
            for (cw, _) in p.factor.terms() {
                rep.check(cw.is_central(), || format!("𝔪 has a term at {cw}"));
            }
            for i in 1..=g.num_simple() {
                match p.factor.w_act(g, &g.s(i)) {
                    Ok((moved, safe)) => {
                        rep.check(moved.agrees_with(&p.factor, safe, Some(vmax)), || format!("w_{i}𝔪 ≠ 𝔪"))
                    }
                    Err(e) => rep.check(false, || e.to_string()),
                }
            }
        }
    }
    rep
}

/// Symmetrizer `H₀` against the closed product.
pub fn h0(g: &WeylGroup, depth: u32, vmax: i32) -> SuiteReport {
    let mut rep = SuiteReport::new("h0", json!({"depth": depth, "vmax": vmax}));
    match (h_zero(g, depth, vmax, HZeroRoute::Symmetrizer), h_zero(g, depth, vmax, HZeroRoute::Product)) {
        (Ok(a), Ok(b)) => {
            let bad = a.disagreements(&b, Some(depth), Some(vmax));
            rep.check(bad.is_empty(), || format!("symmetrizer and product differ at {bad:?}"));
        }
        (Err(e), _) | (_, Err(e)) => rep.check(false, || e.to_string()),
    }
    rep
}

/// Both construction orders of `θ_μ` on sampled non-dominant Tits-cone coweights. How many
/// of them start with different simple roots is reported; in rank one that never happens,
/// since `⟨a_1, μ⟩ + ⟨a_0, μ⟩` is the level.
pub fn theta(h: &HeckeAlgebra, samples: usize, r: &mut ChaCha8Rng) -> SuiteReport {
    let data = h.cartan();
    let l = data.rank();
    let mut rep = SuiteReport::new("theta", json!({"exact": true}));
    let mut taken = 0;
    let mut distinct = 0;
    let mut tries = 0;
    while taken < samples && tries < 100 * samples.max(1) {
        tries += 1;
        let mu = random_coweight(r, l, (-2, 2), (-3, 3), (1, 2));
        if data.is_dominant(&mu) {
            continue;
        }
        taken += 1;
        let (Ok(a), Ok(b)) = (
            h.theta_construct(&mu, ThetaPolicy::SmallestIndex, 64),
            h.theta_construct(&mu, ThetaPolicy::LargestIndex, 64),
        ) else {
            rep.check(false, || format!("construction of θ at {mu} failed"));
            continue;
        };
        if first_step(&a, &mu) != first_step(&b, &mu) {
            distinct += 1;
        }
        rep.check(a.verified && b.verified && a.value == b.value, || format!("θ at {mu}"));
    }
    rep.window = json!({"exact": true, "sampled": taken, "distinct_first_steps": distinct});
    rep
}

pub fn first_step(c: &affine_hecke::ThetaConstruction, mu: &Coweight) -> Option<usize> {
    match &c.nodes[mu] {
        ThetaExpr::Step { a, .. } => Some(*a),
        ThetaExpr::Dominant => None,
    }
}

pub fn run(cfg: &RunConfig, suite: &str, samples: usize) -> Result<Outcome, CliError> {
    let g = crate::commands::group(cfg)?;
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(CliError::Input(format!("unknown suite {s:?}; expected one of {SUITES:?} or all"))),
    };
    let h = HeckeAlgebra::new(g.clone());
    let mut reports = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let mut r = rng(cfg, i as u64 + 1);
        let rep = match *name {
            "cb" => cb(&g, cfg.depth)?,
            "quadratic" => quadratic(&g, samples, &mut r)?,
            "assoc" => assoc(&h, samples, &mut r),
            "bernstein" => bernstein(&h),
            "hplus" => hplus(&h, samples, &mut r),
            "proportionality" => proportionality(&g, cfg.depth, cfg.vmax, cfg.shell_budget),
            "h0" => h0(&g, cfg.depth, cfg.vmax),
            _ => theta(&h, samples, &mut r),
        };
        reports.push(rep);
    }
    let ok = reports.iter().all(SuiteReport::pass);
    let report = json!({
        "command": "identities",
        "type": cfg.cartan_type,
        "seed": cfg.seed,
        "samples": samples,
        "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
        "pass": ok,
    });
    Ok(Outcome { report, ok })
}
