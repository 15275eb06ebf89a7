use std::collections::{BTreeMap, HashMap};

use affine_cartan::{AffineCartanData, Coweight, MAX_RANK};
use affine_weyl::{WeylElement, WeylGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{LPoly, SeriesError, VCoeff};

/// What a series needs from the Cartan data: `⟨ρ, ·⟩` and the dominance test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gauge {
    coxeter: i64,
    theta: [i64; MAX_RANK],
    rank: usize,
}

impl Gauge {
    pub fn new(data: &AffineCartanData) -> Self {
        let mut theta = [0; MAX_RANK];
        theta[..data.rank()].copy_from_slice(data.theta());
        Gauge { coxeter: data.coxeter_number(), theta, rank: data.rank() }
    }

    #[inline]
    pub fn rho(&self, cw: &Coweight) -> i64 {
        cw.c * self.coxeter + cw.finite().iter().sum::<i64>()
    }

    /// `mu ≤ lam` in dominance order.
    pub fn leq(&self, mu: &Coweight, lam: &Coweight) -> bool {
        let q = *lam - *mu;
        if q.d != 0 || q.c < 0 {
            return false;
        }
        q.finite().iter().zip(&self.theta).all(|(x, t)| x + q.c * t >= 0)
    }
}

/// Anchor, depth and `v`-precision shared by a family of series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TruncationContext {
    pub anchor: Coweight,
    /// `None` for exact (finitely supported) series.
    pub depth: Option<u32>,
    /// Coefficients known modulo `v^{vprec+1}`; `None` when exact in `v`.
    pub vprec: Option<i32>,
}

impl TruncationContext {
    pub fn exact(anchor: Coweight) -> Self {
        TruncationContext { anchor, depth: None, vprec: None }
    }

    pub fn with_depth(anchor: Coweight, depth: u32) -> Self {
        TruncationContext { anchor, depth: Some(depth), vprec: None }
    }

    /// Product context: anchors add, depth is the smaller one.
    pub fn compose(&self, other: &Self) -> Self {
        TruncationContext {
            anchor: self.anchor + other.anchor,
            depth: min_opt(self.depth, other.depth),
            vprec: min_opt(self.vprec, other.vprec),
        }
    }
}

fn layered(s: &Series) -> Vec<(i64, Coweight, &VCoeff)> {
    let mut v: Vec<(i64, Coweight, &VCoeff)> = s.terms.iter().map(|(k, c)| (s.depth_of(k), *k, c)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    v
}

fn min_opt<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// A truncated element `Σ c_μ e^μ` with every `μ ≤ anchor` and `⟨ρ, anchor − μ⟩ ≤ depth`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series {
    gauge: Gauge,
    ctx: TruncationContext,
    terms: HashMap<Coweight, VCoeff>,
}

impl Series {
    pub fn zero(data: &AffineCartanData, ctx: TruncationContext) -> Self {
        Series { gauge: Gauge::new(data), ctx, terms: HashMap::new() }
    }

    pub fn zero_with_gauge(gauge: Gauge, ctx: TruncationContext) -> Self {
        Series { gauge, ctx, terms: HashMap::new() }
    }

    /// The exact monomial `coeff · e^cw`, anchored at `cw`.
    pub fn monomial(data: &AffineCartanData, cw: Coweight, coeff: VCoeff) -> Self {
        let mut s = Self::zero(data, TruncationContext::exact(cw));
        s.add_term(cw, coeff).expect("anchor term");
        s
    }

    /// The unit `e^0`.
    pub fn one(data: &AffineCartanData) -> Self {
        Self::monomial(data, data.zero(), VCoeff::one())
    }

    pub fn gauge(&self) -> Gauge {
        self.gauge
    }

    pub fn context(&self) -> TruncationContext {
        self.ctx
    }

    pub fn anchor(&self) -> Coweight {
        self.ctx.anchor
    }

    pub fn depth(&self) -> Option<u32> {
        self.ctx.depth
    }

    pub fn vprec(&self) -> Option<i32> {
        self.ctx.vprec
    }

    pub fn is_exact(&self) -> bool {
        self.ctx.depth.is_none() && self.ctx.vprec.is_none()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `⟨ρ, anchor − μ⟩`.
    #[inline]
    pub fn depth_of(&self, mu: &Coweight) -> i64 {
        self.gauge.rho(&self.ctx.anchor) - self.gauge.rho(mu)
    }

    fn in_window(&self, mu: &Coweight) -> Result<bool, SeriesError> {
        if !self.gauge.leq(mu, &self.ctx.anchor) {
            return Err(SeriesError::NotBelowAnchor(*mu));
        }
        Ok(match self.ctx.depth {
            Some(d) => self.depth_of(mu) <= d as i64,
            None => true,
        })
    }

    fn clip(&self, c: VCoeff) -> VCoeff {
        match self.ctx.vprec {
            Some(p) => c.truncate_v(p),
            None => c,
        }
    }

    /// Adds `coeff · e^mu`; silently dropped when deeper than the depth.
    pub fn add_term(&mut self, mu: Coweight, coeff: VCoeff) -> Result<(), SeriesError> {
        if !self.in_window(&mu)? {
            return Ok(());
        }
        self.accumulate(mu, coeff);
        Ok(())
    }

    fn accumulate(&mut self, mu: Coweight, coeff: VCoeff) {
        let coeff = self.clip(coeff);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(c) => {
                let s = &*c + &coeff;
                if s.is_zero() {
                    self.terms.remove(&mu);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(mu, coeff);
            }
        }
    }

    pub fn coeff(&self, mu: &Coweight) -> VCoeff {
        self.terms.get(mu).cloned().unwrap_or_else(VCoeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &VCoeff)> {
        self.terms.iter()
    }

    /// Terms by increasing depth, then coweight order.
    pub fn sorted_terms(&self) -> Vec<(Coweight, VCoeff)> {
        let mut v: Vec<(Coweight, VCoeff)> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| self.depth_of(&a.0).cmp(&self.depth_of(&b.0)).then(a.0.cmp(&b.0)));
        v
    }

    /// Smallest `v`-valuation over all coefficients.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.values().filter_map(|c| c.valuation()).min()
    }

    pub fn max_term_depth(&self) -> Option<i64> {
        self.terms.keys().map(|k| self.depth_of(k)).max()
    }

    pub fn with_context(&self, ctx: TruncationContext) -> Result<Self, SeriesError> {
        let mut out = Series { gauge: self.gauge, ctx, terms: HashMap::with_capacity(self.terms.len()) };
        for (k, c) in &self.terms {
            out.add_term(*k, c.clone())?;
        }
        Ok(out)
    }

    /// Restrict to a smaller depth.
    pub fn truncate(&self, depth: u32) -> Self {
        let d = min_opt(self.ctx.depth, Some(depth));
        let ctx = TruncationContext { depth: d, ..self.ctx };
        self.with_context(ctx).expect("same anchor")
    }

    /// Restrict to a smaller `v`-precision.
    pub fn truncate_v(&self, vprec: i32) -> Self {
        let p = min_opt(self.ctx.vprec, Some(vprec));
        let ctx = TruncationContext { vprec: p, ..self.ctx };
        self.with_context(ctx).expect("same anchor")
    }

    /// Move to a higher anchor, preserving the set of known exponents.
    pub fn reanchor(&self, anchor: Coweight) -> Result<Self, SeriesError> {
        if !self.gauge.leq(&self.ctx.anchor, &anchor) {
            return Err(SeriesError::NotBelowAnchor(self.ctx.anchor));
        }
        let shift = (self.gauge.rho(&anchor) - self.gauge.rho(&self.ctx.anchor)) as u32;
        let ctx = TruncationContext { anchor, depth: self.ctx.depth.map(|d| d + shift), ..self.ctx };
        self.with_context(ctx)
    }

    /// Forget the `v`-precision, treating the stored coefficients as exact.
    pub fn assume_exact_in_v(&self) -> Self {
        let mut s = self.clone();
        s.ctx.vprec = None;
        s
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add_scaled(other, &VCoeff::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add_scaled(other, &VCoeff::int(-1))
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, other: &Self, k: &VCoeff) -> Result<Self, SeriesError> {
        if self.ctx.anchor != other.ctx.anchor {
            return Err(SeriesError::AnchorMismatch(self.ctx.anchor, other.ctx.anchor));
        }
        let ctx = TruncationContext {
            anchor: self.ctx.anchor,
            depth: min_opt(self.ctx.depth, other.ctx.depth),
            vprec: min_opt(self.ctx.vprec, other.ctx.vprec),
        };
        let mut out = self.with_context(ctx)?;
        for (mu, c) in &other.terms {
            if out.in_window(mu)? {
                out.accumulate(*mu, if k.is_one() { c.clone() } else { c * k });
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&VCoeff::int(-1))
    }

    pub fn scale(&self, k: &VCoeff) -> Self {
        let mut out = Series { gauge: self.gauge, ctx: self.ctx, terms: HashMap::with_capacity(self.terms.len()) };
        if let (Some(p), Some(val)) = (self.ctx.vprec, k.valuation()) {
            out.ctx.vprec = Some(p + val);
        }
        for (mu, c) in &self.terms {
            out.accumulate(*mu, c * k);
        }
        out
    }

    /// Multiply by `e^shift`.
    pub fn shift(&self, shift: Coweight) -> Self {
        Series {
            gauge: self.gauge,
            ctx: TruncationContext { anchor: self.ctx.anchor + shift, ..self.ctx },
            terms: self.terms.iter().map(|(k, c)| (*k + shift, c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut ctx = self.ctx.compose(&other.ctx);
        let vf = self.valuation();
        let vg = other.valuation();
        ctx.vprec = match (self.ctx.vprec, other.ctx.vprec) {
            (None, None) => None,
            (Some(pf), None) => Some(pf + vg.unwrap_or(0)),
            (None, Some(pg)) => Some(pg + vf.unwrap_or(0)),
            (Some(pf), Some(pg)) => Some((pf + vg.unwrap_or(pg)).min(pg + vf.unwrap_or(pf))),
        };
        let mut out = Series { gauge: self.gauge, ctx, terms: HashMap::new() };
        let (a, b) = (layered(self), layered(other));
        let cap = ctx.depth.map(|d| d as i64).unwrap_or(i64::MAX);
        for (da, ka, ca) in &a {
            if *da > cap {
                break;
            }
            for (db, kb, cb) in &b {
                if da + db > cap {
                    break;
                }
                out.accumulate(*ka + *kb, *ca * *cb);
            }
        }
        out
    }

    /// `f⁻¹` when the anchor coefficient is a unit.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        let a = self.ctx.anchor;
        let u = self.coeff(&a);
        if u.is_zero() || (self.ctx.vprec.is_some() && u.valuation() != Some(0)) {
            return Err(SeriesError::NotUnit);
        }
        let uinv = u.inv()?;
        if self.terms.len() == 1 {
            let mut out = self.shift(-a - a);
            out.terms = HashMap::new();
            out.accumulate(-a, uinv);
            return Ok(out);
        }
        let depth = self.ctx.depth.ok_or(SeriesError::NeedsDepth)?;
        // g = e^{−a} f / u = 1 − h
        let g = self.shift(-a).scale(&uinv);
        let mut h = g.neg();
        h.accumulate(Coweight::zero(a.rank()), VCoeff::one());
        let one_ctx = TruncationContext { anchor: Coweight::zero(a.rank()), depth: Some(depth), vprec: g.ctx.vprec };
        let mut one = Series { gauge: self.gauge, ctx: one_ctx, terms: HashMap::new() };
        one.accumulate(Coweight::zero(a.rank()), VCoeff::one());
        let mut inv = one.clone();
        for _ in 0..depth {
            inv = one.add(&h.mul(&inv))?;
        }
        Ok(inv.scale(&uinv).shift(-a))
    }

    /// Evaluate at `v² = q⁻¹`.
    pub fn specialize(&self, q: &BigRational) -> Result<BTreeMap<Coweight, BigRational>, SeriesError> {
        if self.ctx.vprec.is_some() {
            return Err(SeriesError::TruncatedInV);
        }
        if q.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let t = q.recip();
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            if !c.is_laurent() {
                return Err(SeriesError::NotVFinite(*mu));
            }
            let val = c.eval_v2(&t).ok_or(SeriesError::OddPower(*mu))?;
            if !val.is_zero() {
                out.insert(*mu, val);
            }
        }
        Ok(out)
    }

    /// Exponents mapped by `w`. Returns the image and a depth up to which it is trustworthy.
    ///
    /// Exact input gives exact output. For truncated input the bound is a heuristic: the
    /// depth minus the largest depth loss seen on the stored terms.
    pub fn w_act(&self, g: &WeylGroup, w: &WeylElement) -> Result<(Self, Option<u32>), SeriesError> {
        let data = g.cartan();
        let mut out = Series { gauge: self.gauge, ctx: self.ctx, terms: HashMap::with_capacity(self.terms.len()) };
        let mut loss = 0i64;
        for (mu, c) in &self.terms {
            if !data.in_tits_cone(mu) {
                return Err(SeriesError::OutsideTitsCone(*mu));
            }
            let img = g.act(w, mu);
            if !self.gauge.leq(&img, &self.ctx.anchor) {
                return Err(SeriesError::NotBelowAnchor(img));
            }
            loss = loss.max(self.depth_of(mu) - self.depth_of(&img));
            if out.in_window(&img)? {
                out.accumulate(img, c.clone());
            }
        }
        let safe = self.ctx.depth.map(|d| (d as i64 - loss).max(0) as u32);
        Ok((out, safe))
    }

    /// Coefficient-wise equality on all exponents of depth `≤ depth`, modulo `v^{vprec+1}` if given.
    pub fn agrees_with(&self, other: &Self, depth: Option<u32>, vprec: Option<i32>) -> bool {
        self.disagreements(other, depth, vprec).is_empty()
    }

    /// Exponents where the two series differ inside the window.
    pub fn disagreements(&self, other: &Self, depth: Option<u32>, vprec: Option<i32>) -> Vec<Coweight> {
        let mut bad = Vec::new();
        let keys: std::collections::BTreeSet<Coweight> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        for k in keys {
            if let Some(d) = depth {
                if self.depth_of(&k) > d as i64 {
                    continue;
                }
            }
            let (a, b) = (self.coeff(&k), other.coeff(&k));
            let same = match vprec {
                Some(p) => a.eq_mod(&b, p),
                None => a == b,
            };
            if !same {
                bad.push(k);
            }
        }
        bad
    }

    /// Largest numerator degree over all coefficients.
    pub fn max_v_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(|c| c.num().degree()).max()
    }

    pub fn from_terms(
        data: &AffineCartanData,
        ctx: TruncationContext,
        terms: impl IntoIterator<Item = (Coweight, VCoeff)>,
    ) -> Result<Self, SeriesError> {
        let mut s = Self::zero(data, ctx);
        for (k, c) in terms {
            s.add_term(k, c)?;
        }
        Ok(s)
    }

    /// Coefficients as Laurent polynomials, if all of them are.
    pub fn laurent_terms(&self) -> Option<Vec<(Coweight, LPoly)>> {
        self.sorted_terms().into_iter().map(|(k, c)| c.as_laurent().cloned().map(|p| (k, p))).collect()
    }

    pub fn specialize_int(&self, q: i64) -> Result<BTreeMap<Coweight, BigRational>, SeriesError> {
        self.specialize(&BigRational::from_integer(BigInt::from(q)))
    }
}
