//! The six commands. Each takes a resolved [`RunConfig`] and returns an [`Outcome`].

use std::collections::BTreeMap;

use affine_cartan::{Coweight, RootBound};
use affine_hecke::{HeckeAlgebra, ThetaPolicy};
use affine_polyrep::poincare_data;
use affine_roots::{inversion_sets, scan_inversion_sets, InversionSets};
use affine_spherical::{j_function, satake_by_disassembly, satake_by_macdonald, JRoute, QValue, SatakeResult};
use affine_weyl::{WeylElement, WeylGroup};
use serde_json::{json, Value};

use crate::config::{QSpec, RunConfig};
use crate::json;
use crate::{CliError, Outcome};

/// Largest listing `enumerate` will produce.
pub const ENUMERATION_BUDGET: usize = 100_000;

pub fn group(cfg: &RunConfig) -> Result<WeylGroup, CliError> {
    WeylGroup::from_name(&cfg.cartan_type).map_err(|e| CliError::Input(format!("type {:?}: {e}", cfg.cartan_type)))
}

pub fn parse_word(g: &WeylGroup, text: &str) -> Result<WeylElement, CliError> {
    let word: Vec<usize> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad word {text:?}"))))
            .collect::<Result<_, _>>()?
    };
    g.from_word(&word).map_err(|e| CliError::Input(e.to_string()))
}

fn q_value(q: &QSpec) -> QValue {
    match q {
        QSpec::Symbolic => QValue::Symbolic,
        QSpec::Rational(r) => QValue::Rational(r.clone()),
    }
}

fn route_json(g: &WeylGroup, r: &SatakeResult) -> Value {
    json!({
        "route": r.route.name(),
        "shells_used": r.shells_used,
        "terms": json::terms(g.cartan(), &r.lambda, &r.series, r.values.as_ref()),
    })
}

pub fn satake(cfg: &RunConfig, lam: &Coweight) -> Result<Outcome, CliError> {
    let g = group(cfg)?;
    if !g.cartan().is_dominant(lam) {
        return Err(CliError::Input(format!("λ = {lam} is not dominant")));
    }
    let q = q_value(&cfg.q);
    let dis = satake_by_disassembly(&g, lam, cfg.depth, cfg.shell_budget, JRoute::Recursion, q.clone())?;
    let mac = satake_by_macdonald(&g, lam, cfg.depth, cfg.vmax, q)?;
    let diff = dis.series.disagreements(&mac.series, Some(cfg.depth), None);
    let data = g.cartan();
    let report = json!({
        "command": "satake",
        "type": cfg.cartan_type,
        "lambda": json::coweight(lam),
        "q": cfg.q.label(),
        "window": {"depth": cfg.depth, "vmin": cfg.vmin, "vmax": cfg.vmax, "shells": cfg.shell_budget},
        "routes": {"disassembly": route_json(&g, &dis), "macdonald": route_json(&g, &mac)},
        "diff": json::sorted_coweights(data, lam, diff.iter()).iter().map(json::coweight).collect::<Vec<_>>(),
        "agree": diff.is_empty(),
    });
    Ok(Outcome { report, ok: diff.is_empty() })
}

pub fn jfun(cfg: &RunConfig, lam: &Coweight, word: &str) -> Result<Outcome, CliError> {
    let g = group(cfg)?;
    let w = parse_word(&g, word)?;
    let data = g.cartan();
    let mut routes = BTreeMap::new();
    let mut series = Vec::new();
    for (name, route) in [("J-recursion", JRoute::Recursion), ("DL-operator", JRoute::Operator)] {
        let j = j_function(&g, &w, lam, route)?;
        let values = match &cfg.q {
            QSpec::Symbolic => None,
            QSpec::Rational(q) => Some(j.specialize(q).map_err(|e| CliError::Mismatch(e.to_string()))?),
        };
        routes.insert(name, json::terms(data, lam, &j, values.as_ref()));
        series.push(j);
    }
    let agree = series[0] == series[1];
    let report = json!({
        "command": "jfun",
        "type": cfg.cartan_type,
        "lambda": json::coweight(lam),
        "word": g.reduced_word(&w),
        "length": g.length(&w),
        "q": cfg.q.label(),
        "routes": routes,
        "agree": agree,
    });
    Ok(Outcome { report, ok: agree })
}

pub fn theta(cfg: &RunConfig, mu: &Coweight, budget: usize) -> Result<Outcome, CliError> {
    let h = HeckeAlgebra::new(group(cfg)?);
    let a = h.theta_construct(mu, ThetaPolicy::SmallestIndex, budget)?;
    let b = h.theta_construct(mu, ThetaPolicy::LargestIndex, budget)?;
    let info = |c: &affine_hecke::ThetaConstruction| {
        json!({"nodes": c.nodes.len(), "depth": c.depth(), "verified": c.verified, "terms": c.value.len()})
    };
    let agree = a.value == b.value;
    let ok = agree && a.verified && b.verified;
    let report = json!({
        "command": "theta",
        "type": cfg.cartan_type,
        "mu": json::coweight(mu),
        "policies": {"smallest-index": info(&a), "largest-index": info(&b)},
        "agree": agree,
    });
    Ok(Outcome { report, ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Listing {
    Weyl,
    Roots,
    AffRoots,
}

fn inversion_json(sets: &InversionSets) -> Value {
    let pairs = |v: &[(affine_roots::AffinizedRoot, affine_roots::AffinizedRoot)]| {
        v.iter().map(|(s, i)| json!({"source": json::affinized(s), "image": json::affinized(i)})).collect::<Vec<_>>()
    };
    json!({
        "positive_to_negative": pairs(&sets.positive_to_negative),
        "negative_to_positive": pairs(&sets.negative_to_positive),
        "sizes": [sets.positive_to_negative.len(), sets.negative_to_positive.len()],
        "cutoff": {"delta_level": sets.cutoff.delta_level, "pi_level": sets.cutoff.pi_level},
    })
}

/// `bound` is a length for `weyl` and a δ-level for `roots`. For `affroots` the element is
/// `π^λ w` with `w` given by `word`.
pub fn enumerate(
    cfg: &RunConfig,
    what: Listing,
    bound: u32,
    word: &str,
    lam: Option<&Coweight>,
) -> Result<Outcome, CliError> {
    let g = group(cfg)?;
    let data = g.cartan();
    let report = match what {
        Listing::Weyl => {
            let predicted: i64 = poincare_data(&g)
                .map_err(|e| CliError::Input(e.to_string()))?
                .affine_counts(bound as usize)
                .iter()
                .sum();
            if predicted > ENUMERATION_BUDGET as i64 {
                return Err(CliError::Budget(format!("{predicted} elements exceed {ENUMERATION_BUDGET}")));
            }
            let shells = g.bfs_enumerate(bound);
            let total: usize = shells.iter().map(Vec::len).sum();
            let listed: Vec<Value> = shells
                .iter()
                .enumerate()
                .map(|(n, s)| {
                    let mut words: Vec<Vec<usize>> = s.iter().map(|w| g.reduced_word(w)).collect();
                    words.sort();
                    json!({"length": n, "count": s.len(), "elements": words})
                })
                .collect();
            json!({"command": "enumerate", "what": "weyl", "type": cfg.cartan_type, "bound": bound, "total": total, "shells": listed})
        }
        Listing::Roots => {
            let roots = data.positive_real_roots(RootBound::DeltaLevel(bound as i64));
            if roots.len() > ENUMERATION_BUDGET {
                return Err(CliError::Budget(format!("{} roots exceed {ENUMERATION_BUDGET}", roots.len())));
            }
            let listed: Vec<Value> =
                roots.iter().map(|r| json!({"root": json::root(r), "height": data.root_height(r)})).collect();
            json!({"command": "enumerate", "what": "roots", "type": cfg.cartan_type, "bound": bound, "count": roots.len(), "roots": listed})
        }
        Listing::AffRoots => {
            let w = parse_word(&g, word)?;
            let lam = lam.copied().unwrap_or_else(|| data.zero());
            let x = g.extended(lam, w);
            let sets = inversion_sets(&g, &x)?;
            if sets.positive_to_negative.len() > ENUMERATION_BUDGET {
                return Err(CliError::Budget("inversion set too large".into()));
            }
            let cut = affine_roots::Cutoff {
                delta_level: sets.cutoff.delta_level + 1,
                pi_level: sets.cutoff.pi_level + 1,
            };
            let saturated = scan_inversion_sets(&g, &x, cut.doubled()).sizes() == sets.sizes();
            json!({
                "command": "enumerate",
                "what": "affroots",
                "type": cfg.cartan_type,
                "element": {"lambda": json::coweight(&lam), "word": g.reduced_word(&w)},
                "inversion_sets": inversion_json(&sets),
                "saturated": saturated,
            })
        }
    };
    let ok = report.get("saturated").and_then(Value::as_bool).unwrap_or(true);
    Ok(Outcome { report, ok })
}
