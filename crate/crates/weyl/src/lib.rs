//! The affine Weyl group `W = W_o ⋉ Q_o∨` of an untwisted simply-laced type.
//!
//! Elements are kept in the canonical form `t_H ∘ u`; reduced words are derived on demand.

mod element;
mod extended;
pub mod parabolic;

use std::collections::{HashMap, HashSet};

use affine_cartan::{AffineCartanData, CorootAff, Coweight, RootAff, MAX_RANK};
use thiserror::Error;

pub use element::WeylElement;
pub use extended::ExtendedElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("simple index {index} out of range 1..={max}")]
    BadIndex { index: usize, max: usize },
    #[error("{0:?} is outside the Tits cone")]
    NotInTitsCone(Coweight),
    #[error("{0:?} is not dominant")]
    NotDominant(Coweight),
    #[error("{0:?} is not a real root")]
    NotReal(RootAff),
    #[error("parabolic subgroup on {0:?} could not be classified")]
    Unclassified(Vec<usize>),
}

/// Orbit data of a dominant coweight: `W_λ` is generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerData {
    pub generators: Vec<usize>,
    pub finite: bool,
    /// Coefficients of `W_λ(t)` in `t = v²`, present when `W_λ` is finite.
    pub poincare: Option<Vec<u64>>,
}

/// Largest parabolic subgroup enumerated element by element; larger ones use their degrees.
pub const ENUMERATION_CAP: usize = 200_000;

#[derive(Debug, Clone)]
pub struct WeylGroup {
    data: AffineCartanData,
    gens: Vec<WeylElement>,
    /// Finite roots with a flag for positivity.
    roots: Vec<([i64; MAX_RANK], bool)>,
}

impl WeylGroup {
    pub fn new(data: AffineCartanData) -> Self {
        let l = data.rank();
        let a = data.finite_cartan_matrix();
        let mut gens = Vec::with_capacity(l + 1);
        for i in 0..l {
            // x ↦ x − (Ax)_i e_i
            let mut m: Vec<Vec<i64>> = (0..l).map(|r| (0..l).map(|c| (r == c) as i64).collect()).collect();
            for c in 0..l {
                m[i][c] -= a[i][c];
            }
            gens.push(WeylElement::from_parts(l, &m, &vec![0; l]));
        }
        // w_{ℓ+1} is the reflection in −θ + δ, i.e. t_{−θ∨} ∘ s_θ.
        let theta = data.theta().to_vec();
        let at: Vec<i64> = (0..l).map(|c| (0..l).map(|k| theta[k] * a[k][c]).sum()).collect();
        let m: Vec<Vec<i64>> = (0..l)
            .map(|r| (0..l).map(|c| (r == c) as i64 - theta[r] * at[c]).collect())
            .collect();
        let h: Vec<i64> = theta.iter().map(|x| -x).collect();
        gens.push(WeylElement::from_parts(l, &m, &h));
        let roots = data
            .finite_roots()
            .into_iter()
            .map(|r| {
                let mut a = [0i64; MAX_RANK];
                a[..l].copy_from_slice(&r);
                let pos = r.iter().all(|&x| x >= 0);
                (a, pos)
            })
            .collect();
        WeylGroup { data, gens, roots }
    }

    pub fn from_name(name: &str) -> Result<Self, affine_cartan::CartanError> {
        Ok(Self::new(AffineCartanData::from_name(name)?))
    }

    pub fn cartan(&self) -> &AffineCartanData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn num_simple(&self) -> usize {
        self.data.num_simple()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    fn check(&self, i: usize) -> Result<(), WeylError> {
        if i == 0 || i > self.num_simple() {
            Err(WeylError::BadIndex { index: i, max: self.num_simple() })
        } else {
            Ok(())
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement, WeylError> {
        self.check(i)?;
        Ok(self.gens[i - 1])
    }

    /// `w_i`; panics on a bad index.
    pub fn s(&self, i: usize) -> WeylElement {
        self.gens[i - 1]
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a.compose(b)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        let mut w = self.identity();
        for &i in word {
            self.check(i)?;
            w = w.compose(&self.gens[i - 1]);
        }
        Ok(w)
    }

    /// Pure translation `t_H`.
    pub fn translation(&self, h: &[i64]) -> WeylElement {
        self.identity().with_translation(h)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let u = w.finite_part();
        let mut uinv = self.identity();
        for &i in self.reduced_word(&u).iter().rev() {
            uinv = uinv.compose(&self.gens[i - 1]);
        }
        let h = uinv.apply_matrix(w.translation());
        let neg: Vec<i64> = h[..self.rank()].iter().map(|x| -x).collect();
        uinv.with_translation(&neg)
    }

    /// `(x, y)` on finite coordinates.
    #[inline]
    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        self.data.form(x, y)
    }

    pub fn act(&self, w: &WeylElement, cw: &Coweight) -> Coweight {
        let l = self.rank();
        let lam = w.apply_matrix(cw.finite());
        let h = w.translation();
        let hh = self.form(h, h);
        let c = cw.c + self.form(&lam[..l], h) - cw.d * hh / 2;
        let mut fin = lam;
        for i in 0..l {
            fin[i] -= cw.d * h[i];
        }
        Coweight::new(c, &fin[..l], cw.d)
    }

    /// `w(β + mδ) = Mβ + (m + ⟨Mβ, H⟩)δ`.
    pub fn act_root(&self, w: &WeylElement, root: &RootAff) -> RootAff {
        let l = self.rank();
        let g = w.apply_matrix(root.finite());
        let m = root.m + self.form(&g[..l], w.translation());
        RootAff::new(&g[..l], m)
    }

    pub fn act_coroot(&self, w: &WeylElement, c: &CorootAff) -> CorootAff {
        let l = self.rank();
        let g = w.apply_matrix(c.finite());
        let m = c.cm + self.form(&g[..l], w.translation());
        CorootAff::new(&g[..l], m)
    }

    /// Reflection in a real root `β + mδ`, equal to `t_{mβ∨} ∘ s_β`.
    pub fn reflection(&self, root: &RootAff) -> Result<WeylElement, WeylError> {
        if !self.data.is_real_root(root) {
            return Err(WeylError::NotReal(*root));
        }
        let l = self.rank();
        let b = root.finite();
        let a = self.data.finite_cartan_matrix();
        let ab: Vec<i64> = (0..l).map(|c| (0..l).map(|k| b[k] * a[k][c]).sum()).collect();
        let m: Vec<Vec<i64>> =
            (0..l).map(|r| (0..l).map(|c| (r == c) as i64 - b[r] * ab[c]).collect()).collect();
        let h: Vec<i64> = b.iter().map(|x| root.m * x).collect();
        Ok(WeylElement::from_parts(l, &m, &h))
    }

    fn root_is_positive(&self, fin: &[i64], m: i64) -> bool {
        let pos = fin.iter().any(|&x| x > 0);
        if pos {
            m >= 0
        } else {
            m > 0
        }
    }

    /// `ℓ(w) = #{a > 0 : w(a) < 0}`, counted per finite root.
    pub fn length(&self, w: &WeylElement) -> u32 {
        let l = self.rank();
        let h = w.translation();
        let mut total = 0i64;
        for (beta, pos) in &self.roots {
            let g = w.apply_matrix(&beta[..l]);
            let k = -self.form(&g[..l], h);
            let mmin = if *pos { 0 } else { 1 };
            let gpos = g[..l].iter().any(|&x| x > 0);
            let cnt = if gpos { k - mmin } else { k - mmin + 1 };
            total += cnt.max(0);
        }
        total as u32
    }

    /// `w(a_i) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        let a = self.data.simple_root(i);
        let img = self.act_root(w, &a);
        !self.root_is_positive(img.finite(), img.m)
    }

    /// `w⁻¹(a_i) < 0`.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.is_right_descent(&self.inverse(w), i)
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (1..=self.num_simple()).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    /// Reduced word, peeling the smallest-index right descent each step.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = *w;
        while !cur.is_identity() {
            let i = (1..=self.num_simple())
                .find(|&i| self.is_right_descent(&cur, i))
                .expect("nonidentity element has a right descent");
            word.push(i);
            cur = cur.compose(&self.gens[i - 1]);
        }
        word.reverse();
        word
    }

    /// All elements of length `≤ max_len`, grouped by length, each shell sorted.
    pub fn bfs_enumerate(&self, max_len: u32) -> Vec<Vec<WeylElement>> {
        let all: Vec<usize> = (1..=self.num_simple()).collect();
        self.shells(max_len, &all, |_| true)
    }

    /// Shells of the subgroup generated by `gens`, filtered by an order ideal predicate
    /// closed under removing a left descent.
    fn shells<F>(&self, max_len: u32, gens: &[usize], keep: F) -> Vec<Vec<WeylElement>>
    where
        F: Fn(&WeylElement) -> bool,
    {
        let mut shells = vec![vec![self.identity()]];
        let mut prev: HashSet<WeylElement> = HashSet::new();
        for _ in 0..max_len {
            let cur = shells.last().unwrap();
            let mut next: HashSet<WeylElement> = HashSet::new();
            for w in cur {
                for &i in gens {
                    let x = self.gens[i - 1].compose(w);
                    if !prev.contains(&x) && !next.contains(&x) && keep(&x) {
                        next.insert(x);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            prev = cur.iter().copied().collect();
            let mut v: Vec<WeylElement> = next.into_iter().collect();
            v.sort_unstable();
            shells.push(v);
        }
        shells
    }

    /// `(λ₊, w)` with `λ₊` dominant, `w(λ₊) = cw`, `w` of minimal length.
    pub fn dominant_representative(&self, cw: &Coweight) -> Result<(Coweight, WeylElement), WeylError> {
        if !self.data.in_tits_cone(cw) {
            return Err(WeylError::NotInTitsCone(*cw));
        }
        let mut lam = *cw;
        let mut w = self.identity();
        while let Some(i) = (1..=self.num_simple()).find(|&i| self.data.simple_pairing(i, &lam) < 0) {
            lam = self.data.reflect_coweight(i, &lam);
            w = w.compose(&self.gens[i - 1]);
        }
        Ok((lam, w))
    }

    pub fn stabilizer_data(&self, lam: &Coweight) -> Result<StabilizerData, WeylError> {
        if !self.data.is_dominant(lam) {
            return Err(WeylError::NotDominant(*lam));
        }
        let gens: Vec<usize> =
            (1..=self.num_simple()).filter(|&i| self.data.simple_pairing(i, lam) == 0).collect();
        if gens.len() == self.num_simple() {
            return Ok(StabilizerData { generators: gens, finite: false, poincare: None });
        }
        let degrees = parabolic::parabolic_degrees(&self.data, &gens)
            .ok_or_else(|| WeylError::Unclassified(gens.clone()))?;
        let predicted = parabolic::poincare_from_degrees(&degrees);
        let order: u64 = predicted.iter().sum();
        let poincare = if order as usize <= ENUMERATION_CAP {
            let shells = self.shells(u32::MAX, &gens, |_| true);
            let counts: Vec<u64> = shells.iter().map(|s| s.len() as u64).collect();
            if counts != predicted {
                return Err(WeylError::Unclassified(gens));
            }
            counts
        } else {
            predicted
        };
        Ok(StabilizerData { generators: gens, finite: true, poincare: Some(poincare) })
    }

    /// Elements of `W^λ` (no right descent among the stabilizer generators) up to length `max_len`.
    pub fn minimal_coset_reps(&self, lam: &Coweight, max_len: u32) -> Result<Vec<Vec<WeylElement>>, WeylError> {
        if !self.data.is_dominant(lam) {
            return Err(WeylError::NotDominant(*lam));
        }
        let stab: Vec<usize> =
            (1..=self.num_simple()).filter(|&i| self.data.simple_pairing(i, lam) == 0).collect();
        let all: Vec<usize> = (1..=self.num_simple()).collect();
        Ok(self.shells(max_len, &all, |w| stab.iter().all(|&j| !self.is_right_descent(w, j))))
    }

    /// Bruhat order by searching for a reduced subword of a fixed reduced word of `w`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let word = self.reduced_word(w);
        let mut memo: HashMap<(usize, WeylElement), bool> = HashMap::new();
        self.subword(u, &word, 0, &mut memo)
    }

    fn subword(
        &self,
        x: &WeylElement,
        word: &[usize],
        k: usize,
        memo: &mut HashMap<(usize, WeylElement), bool>,
    ) -> bool {
        if x.is_identity() {
            return true;
        }
        let lx = self.length(x) as usize;
        if lx > word.len() - k {
            return false;
        }
        if let Some(&r) = memo.get(&(k, *x)) {
            return r;
        }
        let s = word[k];
        let mut found = false;
        if self.is_left_descent(x, s) {
            let y = self.gens[s - 1].compose(x);
            found = self.subword(&y, word, k + 1, memo);
        }
        if !found {
            found = self.subword(x, word, k + 1, memo);
        }
        memo.insert((k, *x), found);
        found
    }

    pub fn extended(&self, lam: Coweight, w: WeylElement) -> ExtendedElement {
        ExtendedElement { lam, w }
    }

    /// `π^λ w · π^μ v = π^{λ + wμ} wv`.
    pub fn ext_mul(&self, x: &ExtendedElement, y: &ExtendedElement) -> ExtendedElement {
        ExtendedElement { lam: x.lam + self.act(&x.w, &y.lam), w: x.w.compose(&y.w) }
    }

    pub fn ext_inverse(&self, x: &ExtendedElement) -> ExtendedElement {
        let winv = self.inverse(&x.w);
        ExtendedElement { lam: -self.act(&winv, &x.lam), w: winv }
    }

    /// Membership in `𝒲_X`.
    pub fn ext_in_tits(&self, x: &ExtendedElement) -> bool {
        self.data.in_tits_cone(&x.lam)
    }

    /// `π^λ w ⪯ π^μ v`: `λ < μ`, or `λ = μ` and `w ≤ v` in Bruhat order.
    pub fn preceq(&self, x: &ExtendedElement, y: &ExtendedElement) -> bool {
        if x.lam == y.lam {
            self.bruhat_leq(&x.w, &y.w)
        } else {
            self.data.is_leq(&x.lam, &y.lam)
        }
    }
}
