//! Certified spherical images and their invariants.

use std::collections::BTreeMap;

use affine_cartan::Coweight;
use affine_series::{LPoly, Series, VCoeff};
use affine_weyl::WeylGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::disassembly::disassemble;
use crate::jfun::{q_rho, strip_q_rho, JRoute};
use crate::macdonald::macdonald_quotient;
use crate::SphericalError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QValue {
    Symbolic,
    Rational(BigRational),
}

impl QValue {
    pub fn int(q: i64) -> Self {
        QValue::Rational(BigRational::from_integer(BigInt::from(q)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    JRecursion,
    DlOperator,
    Macdonald,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::JRecursion => "J-recursion",
            Route::DlOperator => "DL-operator",
            Route::Macdonald => "Macdonald",
        }
    }
}

/// Depth below `λ` and, for the Macdonald route, the `v`-precision used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub depth: u32,
    pub vmax: Option<i32>,
}

/// Highest even power of `v` that may appear in a certified Macdonald coefficient.
const V_GUARD: i32 = 2;

#[derive(Clone, Debug)]
pub struct SatakeResult {
    pub lambda: Coweight,
    pub q: QValue,
    pub route: Route,
    pub window: Window,
    pub shells_used: u32,
    /// `q^{⟨ρ,λ⟩} Σ_μ Φ_μ(q⁻¹) e^μ` written in `v`, `v² = q⁻¹`.
    pub series: Series,
    /// The coefficients at `q`, when `q` is a number.
    pub values: Option<BTreeMap<Coweight, BigRational>>,
}

impl SatakeResult {
    /// Checks the leading term and nonnegativity, and specializes when `q` is given.
    fn certify(
        g: &WeylGroup,
        lambda: Coweight,
        q: QValue,
        route: Route,
        window: Window,
        shells_used: u32,
        series: Series,
    ) -> Result<Self, SphericalError> {
        let data = g.cartan();
        if series.anchor() != lambda || series.coeff(&lambda) != q_rho(g, &lambda) {
            return Err(SphericalError::Invariant(format!("leading term of S(h_{lambda}) is not q^⟨ρ,λ⟩ e^λ")));
        }
        if let Some((cw, _)) = series.terms().find(|(cw, _)| !data.is_leq(cw, &lambda)) {
            return Err(SphericalError::Invariant(format!("term e^{cw} is not below λ")));
        }
        let probes: Vec<BigRational> = match &q {
            QValue::Symbolic => (2..=4).map(|k| BigRational::from_integer(BigInt::from(k))).collect(),
            QValue::Rational(x) => vec![x.clone()],
        };
        for p in &probes {
            let vals = series.specialize(p)?;
            if let Some((cw, x)) = vals.iter().find(|(_, x)| x.is_negative()) {
                return Err(SphericalError::Invariant(format!("coefficient {x} at e^{cw} is negative for q = {p}")));
            }
        }
        let values = match &q {
            QValue::Symbolic => None,
            QValue::Rational(x) => Some(series.specialize(x)?),
        };
        Ok(SatakeResult { lambda, q, route, window, shells_used, series, values })
    }

    /// `Φ_μ` as polynomials in `v` (only even powers occur).
    pub fn phi(&self, g: &WeylGroup) -> BTreeMap<Coweight, LPoly> {
        strip_q_rho(g, &self.lambda, &self.series).into_iter().collect()
    }

    /// `J♭`-style rescaling is per `w`; this is the full coefficient at `μ`.
    pub fn coefficient(&self, mu: &Coweight) -> VCoeff {
        self.series.coeff(mu)
    }
}

/// The authoritative route: the sum of the `J_w(λ)` over `W^λ`.
pub fn satake_by_disassembly(
    g: &WeylGroup,
    lam: &Coweight,
    depth: u32,
    shell_budget: u32,
    route: JRoute,
    q: QValue,
) -> Result<SatakeResult, SphericalError> {
    let d = disassemble(g, lam, depth, shell_budget, route)?;
    let r = match route {
        JRoute::Recursion => Route::JRecursion,
        JRoute::Operator => Route::DlOperator,
    };
    let series = d.series.assume_exact_in_v();
    SatakeResult::certify(g, *lam, q, r, Window { depth, vmax: None }, d.shells_used, series)
}

/// `H_λ/H₀`, with every coefficient required to be a polynomial well inside the `v`-window.
pub fn satake_by_macdonald(
    g: &WeylGroup,
    lam: &Coweight,
    depth: u32,
    vmax: i32,
    q: QValue,
) -> Result<SatakeResult, SphericalError> {
    if !g.cartan().is_dominant(lam) {
        return Err(SphericalError::NotDominant(*lam));
    }
    let phi = macdonald_quotient(g, lam, depth, vmax)?;
    for (cw, c) in phi.terms() {
        let p = c.as_laurent().ok_or(SphericalError::NotPolynomial(*cw))?;
        if !p.is_even() || p.valuation().is_some_and(|v| v < 0) {
            return Err(SphericalError::NotPolynomial(*cw));
        }
        let degree = p.degree().unwrap_or(0);
        if degree > vmax - V_GUARD {
            return Err(SphericalError::VFiniteness { cw: *cw, degree, vmax });
        }
    }
    let series = phi.assume_exact_in_v().scale(&q_rho(g, lam));
    SatakeResult::certify(g, *lam, q, Route::Macdonald, Window { depth, vmax: Some(vmax) }, 0, series)
}

/// `Φ_μ(v²)` for every `μ` in the window, from the `J`-recursion.
pub fn phi_table(
    g: &WeylGroup,
    lam: &Coweight,
    depth: u32,
    shell_budget: u32,
) -> Result<BTreeMap<Coweight, LPoly>, SphericalError> {
    let s = satake_by_disassembly(g, lam, depth, shell_budget, JRoute::Recursion, QValue::Symbolic)?;
    Ok(s.phi(g))
}

/// Pairs `(μ, i)` inside the window where the coefficients at `μ` and `w_i μ` differ.
pub fn w_invariance_failures(g: &WeylGroup, s: &SatakeResult) -> Vec<(Coweight, usize)> {
    let data = g.cartan();
    let depth = s.window.depth as i64;
    let mut bad = Vec::new();
    let mut keys: Vec<Coweight> = s.series.terms().map(|(k, _)| *k).collect();
    keys.sort();
    for mu in keys {
        for i in 1..=g.num_simple() {
            let nu = data.reflect_coweight(i, &mu);
            if !data.is_leq(&nu, &s.lambda) || s.series.depth_of(&nu) > depth {
                continue;
            }
            let (a, b) = (s.series.coeff(&mu), s.series.coeff(&nu));
            if a != b {
                bad.push((mu, i));
            }
        }
    }
    bad
}
