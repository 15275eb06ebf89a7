//! Exact affine Cartan data for untwisted simply-laced types.
//!
//! Indices of simple roots run over `1..=ℓ+1`; index `ℓ+1` is the affine node
//! `a_{ℓ+1} = −θ + δ` with coroot `a_{ℓ+1}∨ = −θ∨ + 𝐜`.

mod lattice;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use lattice::{CorootAff, Coweight, RootAff};

pub const MAX_RANK: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("unknown or unsupported Cartan type {0:?}")]
    UnknownType(String),
    #[error("{0:?} is not a nonnegative combination of simple coroots")]
    NotInPositiveCone(Coweight),
    #[error("the zero coroot has no multiplicity")]
    ZeroCoroot,
    #[error("{0:?} is not a real root")]
    NotReal(RootAff),
    #[error("{0:?} is not a coroot")]
    NotCoroot(CorootAff),
    #[error("simple index {index} out of range 1..={max}")]
    BadIndex { index: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl FromStr for CartanType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CartanError::UnknownType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(bad());
        }
        Ok(CartanType { family, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}{}", self.rank)
    }
}

/// Which bound to apply when listing positive real roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBound {
    /// All positive real roots `α + mδ` with `m ≤ bound`.
    DeltaLevel(i64),
    /// All positive real roots of height at most `bound`.
    Height(i64),
}

/// Cartan matrix, highest root and finite root system of an untwisted affine type.
#[derive(Debug, Clone)]
pub struct AffineCartanData {
    ty: CartanType,
    rank: usize,
    cartan: Vec<i64>,
    theta: Vec<i64>,
    positive: Vec<Vec<i64>>,
    roots: BTreeSet<Vec<i64>>,
    coxeter: i64,
}

fn finite_cartan(ty: CartanType) -> Vec<i64> {
    let l = ty.rank;
    let mut a = vec![0i64; l * l];
    for i in 0..l {
        a[i * l + i] = 2;
    }
    let mut edge = |i: usize, j: usize| {
        a[i * l + j] = -1;
        a[j * l + i] = -1;
    };
    match ty.family {
        Family::A => {
            for i in 0..l.saturating_sub(1) {
                edge(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..l - 2 {
                edge(i, i + 1);
            }
            edge(l - 3, l - 1);
        }
        Family::E => {
            edge(0, 2);
            edge(1, 3);
            for i in 2..l - 1 {
                edge(i, i + 1);
            }
        }
    }
    a
}

impl AffineCartanData {
    pub fn new(ty: CartanType) -> Self {
        let rank = ty.rank;
        let cartan = finite_cartan(ty);
        let mut data = AffineCartanData {
            ty,
            rank,
            cartan,
            theta: vec![0; rank],
            positive: Vec::new(),
            roots: BTreeSet::new(),
            coxeter: 0,
        };
        data.build_roots();
        data
    }

    pub fn from_name(name: &str) -> Result<Self, CartanError> {
        Ok(Self::new(name.parse()?))
    }

    fn build_roots(&mut self) {
        let l = self.rank;
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = Vec::new();
        for i in 0..l {
            let mut e = vec![0; l];
            e[i] = 1;
            stack.push(e);
        }
        while let Some(b) = stack.pop() {
            if !roots.insert(b.clone()) {
                continue;
            }
            for i in 0..l {
                let k = self.root_coroot_pairing(&b, i);
                let mut r = b.clone();
                r[i] -= k;
                if !roots.contains(&r) {
                    stack.push(r);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> =
            roots.iter().filter(|r| r.iter().all(|&x| x >= 0)).cloned().collect();
        positive.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| x.cmp(y))
        });
        let theta = positive.last().expect("nonempty root system").clone();
        self.coxeter = 1 + theta.iter().sum::<i64>();
        self.theta = theta;
        self.positive = positive;
        self.roots = roots;
    }

    /// `⟨β, α_i∨⟩` for a finite root `β` in simple-root coordinates (0-based `i`).
    fn root_coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        let l = self.rank;
        (0..l).map(|j| beta[j] * self.cartan[i * l + j]).sum()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// The finite rank `ℓ`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of affine simple roots, `ℓ + 1`.
    pub fn num_simple(&self) -> usize {
        self.rank + 1
    }

    /// Finite Cartan matrix entry `⟨α_j, α_i∨⟩` (0-based).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    pub fn finite_cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| self.cartan(i, j)).collect()).collect()
    }

    /// The symmetric form `(α_i∨, α_j∨)`, normalized so that `(θ, θ) = 2`.
    pub fn symmetric_form(&self) -> Vec<Vec<i64>> {
        self.finite_cartan_matrix()
    }

    /// The affine Cartan matrix with entries `⟨a_j, a_i∨⟩`, indices `0..=ℓ`.
    pub fn affine_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_simple();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.pairing(&self.simple_root(j + 1), &self.simple_coroot(i + 1)))
                    .collect()
            })
            .collect()
    }

    /// Highest root `θ` in simple-root coordinates.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// `h = 1 + ht(θ)`, which is also the height of `𝐜`.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter
    }

    /// Positive roots of the finite root system, ordered by height then lexicographically.
    pub fn finite_positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All finite roots, ordered by height then lexicographically.
    pub fn finite_roots(&self) -> Vec<Vec<i64>> {
        let mut all: Vec<Vec<i64>> = self.roots.iter().cloned().collect();
        all.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| x.cmp(y))
        });
        all
    }

    pub fn is_finite_root(&self, v: &[i64]) -> bool {
        self.roots.contains(v)
    }

    /// `(x, y)` for finite coweights in simple-coroot coordinates.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank;
        let mut s = 0;
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += x[i] * self.cartan[i * l + j] * y[j];
            }
        }
        s
    }

    fn check_index(&self, i: usize) -> Result<(), CartanError> {
        if i == 0 || i > self.num_simple() {
            return Err(CartanError::BadIndex { index: i, max: self.num_simple() });
        }
        Ok(())
    }

    /// Simple root `a_i`, `1 ≤ i ≤ ℓ+1`.
    pub fn simple_root(&self, i: usize) -> RootAff {
        self.check_index(i).expect("simple index");
        if i <= self.rank {
            let mut e = vec![0; self.rank];
            e[i - 1] = 1;
            RootAff::new(&e, 0)
        } else {
            let neg: Vec<i64> = self.theta.iter().map(|x| -x).collect();
            RootAff::new(&neg, 1)
        }
    }

    /// Simple coroot `a_i∨` as a coweight, `1 ≤ i ≤ ℓ+1`.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        self.check_index(i).expect("simple index");
        if i <= self.rank {
            let mut e = vec![0; self.rank];
            e[i - 1] = 1;
            Coweight::new(0, &e, 0)
        } else {
            let neg: Vec<i64> = self.theta.iter().map(|x| -x).collect();
            Coweight::new(1, &neg, 0)
        }
    }

    pub fn simple_coroot_aff(&self, i: usize) -> CorootAff {
        CorootAff::from_coweight(&self.simple_coroot(i)).expect("level zero")
    }

    pub fn delta(&self) -> RootAff {
        RootAff::new(&vec![0; self.rank], 1)
    }

    pub fn zero(&self) -> Coweight {
        Coweight::zero(self.rank)
    }

    pub fn central(&self) -> Coweight {
        Coweight::central(self.rank)
    }

    pub fn derivation(&self) -> Coweight {
        Coweight::derivation(self.rank)
    }

    /// `⟨α + mδ, (c, λ_o, k)⟩ = ⟨α, λ_o⟩ + m·k`.
    pub fn pairing(&self, root: &RootAff, cw: &Coweight) -> i64 {
        self.form(root.finite(), cw.finite()) + root.m * cw.d
    }

    /// `⟨a_i, cw⟩` for a simple index `1 ≤ i ≤ ℓ+1`.
    pub fn simple_pairing(&self, i: usize, cw: &Coweight) -> i64 {
        if i <= self.rank {
            let l = self.rank;
            let fin = cw.finite();
            (0..l).map(|j| self.cartan[(i - 1) * l + j] * fin[j]).sum()
        } else {
            cw.d - self.form(&self.theta, cw.finite())
        }
    }

    /// `⟨a, b∨⟩` between a root and a coroot.
    pub fn root_coroot(&self, root: &RootAff, coroot: &CorootAff) -> i64 {
        self.pairing(root, &coroot.to_coweight())
    }

    pub fn is_real_root(&self, root: &RootAff) -> bool {
        !root.finite_is_zero() && self.is_finite_root(root.finite())
    }

    pub fn is_root(&self, root: &RootAff) -> bool {
        if root.finite_is_zero() {
            root.m != 0
        } else {
            self.is_finite_root(root.finite())
        }
    }

    /// Positivity of a root: `(α > 0, m ≥ 0)` or `(α < 0, m > 0)`; imaginary roots by the sign of `m`.
    pub fn is_positive_root(&self, root: &RootAff) -> bool {
        match root.finite_sign() {
            1 => root.m >= 0,
            -1 => root.m > 0,
            _ => root.m > 0,
        }
    }

    pub fn is_positive_coroot(&self, coroot: &CorootAff) -> bool {
        self.is_positive_root(&RootAff::new(coroot.finite(), coroot.cm))
    }

    /// `α + mδ ↦ α∨ + m𝐜` (simply-laced, so coordinates carry over unchanged).
    pub fn coroot_of(&self, root: &RootAff) -> Result<CorootAff, CartanError> {
        if !self.is_real_root(root) {
            return Err(CartanError::NotReal(*root));
        }
        Ok(CorootAff::new(root.finite(), root.m))
    }

    pub fn root_of(&self, coroot: &CorootAff) -> Result<RootAff, CartanError> {
        let r = RootAff::new(coroot.finite(), coroot.cm);
        if !self.is_real_root(&r) {
            return Err(CartanError::NotCoroot(*coroot));
        }
        Ok(r)
    }

    /// Height of a root: `ht(α) + m·h`.
    pub fn root_height(&self, root: &RootAff) -> i64 {
        root.finite().iter().sum::<i64>() + root.m * self.coxeter
    }

    /// Height of a coroot, `⟨ρ, α∨ + m𝐜⟩`.
    pub fn coroot_height(&self, coroot: &CorootAff) -> i64 {
        coroot.finite().iter().sum::<i64>() + coroot.cm * self.coxeter
    }

    fn sorted_finite_roots_at(&self, m: i64) -> Vec<Vec<i64>> {
        if m == 0 {
            self.positive.clone()
        } else {
            self.finite_roots()
        }
    }

    /// Positive real roots under a finite bound, ordered by δ-level, then finite height,
    /// then lexicographically.
    pub fn positive_real_roots(&self, bound: RootBound) -> Vec<RootAff> {
        let mut out = Vec::new();
        let h = self.coxeter;
        let mmax = match bound {
            RootBound::DeltaLevel(m) => m,
            RootBound::Height(hb) => {
                if hb < 1 {
                    return out;
                }
                // −θ + mδ has the smallest height at level m.
                (hb + self.theta.iter().sum::<i64>()) / h
            }
        };
        for m in 0..=mmax {
            for beta in self.sorted_finite_roots_at(m) {
                let r = RootAff::new(&beta, m);
                if let RootBound::Height(hb) = bound {
                    if self.root_height(&r) > hb {
                        continue;
                    }
                }
                out.push(r);
            }
        }
        out
    }

    /// Positive real coroots of height at most `hmax`, same order as [`Self::positive_real_roots`].
    pub fn positive_real_coroots(&self, hmax: i64) -> Vec<CorootAff> {
        self.positive_real_roots(RootBound::Height(hmax))
            .iter()
            .map(|r| CorootAff::new(r.finite(), r.m))
            .collect()
    }

    /// 1 for real coroots, `ℓ` for imaginary ones.
    pub fn multiplicity(&self, coroot: &CorootAff) -> Result<i64, CartanError> {
        if coroot.is_zero() {
            return Err(CartanError::ZeroCoroot);
        }
        if coroot.is_imaginary() {
            return Ok(self.rank as i64);
        }
        let r = RootAff::new(coroot.finite(), coroot.cm);
        if self.is_real_root(&r) {
            Ok(1)
        } else {
            Err(CartanError::NotCoroot(*coroot))
        }
    }

    /// `⟨ρ, cw⟩` with `⟨ρ, a_i∨⟩ = 1` for all `i` and `⟨ρ, 𝐝⟩ = 0`.
    pub fn rho_pairing(&self, cw: &Coweight) -> i64 {
        cw.c * self.coxeter + cw.finite().iter().sum::<i64>()
    }

    pub fn is_dominant(&self, cw: &Coweight) -> bool {
        (1..=self.num_simple()).all(|i| self.simple_pairing(i, cw) >= 0)
    }

    /// Positive level, or a multiple of `𝐜`.
    pub fn in_tits_cone(&self, cw: &Coweight) -> bool {
        cw.d > 0 || cw.is_central()
    }

    /// Coordinates `n_1..n_{ℓ+1}` of a level-zero coweight in the simple-coroot basis.
    pub fn simple_coroot_coords(&self, q: &Coweight) -> Option<Vec<i64>> {
        if q.d != 0 {
            return None;
        }
        let n_aff = q.c;
        let mut out: Vec<i64> =
            q.finite().iter().zip(&self.theta).map(|(x, t)| x + n_aff * t).collect();
        out.push(n_aff);
        Some(out)
    }

    /// `mu ≤ lam` in dominance order, with the witness `lam − mu = Σ n_i a_i∨`.
    pub fn dominance_leq(&self, mu: &Coweight, lam: &Coweight) -> Option<Vec<i64>> {
        let coords = self.simple_coroot_coords(&(*lam - *mu))?;
        if coords.iter().all(|&n| n >= 0) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_leq(&self, mu: &Coweight, lam: &Coweight) -> bool {
        self.dominance_leq(mu, lam).is_some()
    }

    /// Height of an element of `Q₊∨`.
    pub fn height(&self, q: &Coweight) -> Result<i64, CartanError> {
        match self.simple_coroot_coords(q) {
            Some(c) if c.iter().all(|&n| n >= 0) => Ok(c.iter().sum()),
            _ => Err(CartanError::NotInPositiveCone(*q)),
        }
    }

    /// Apply the simple reflection `w_i` to a coweight: `λ − ⟨a_i, λ⟩ a_i∨`.
    pub fn reflect_coweight(&self, i: usize, cw: &Coweight) -> Coweight {
        let k = self.simple_pairing(i, cw);
        *cw - self.simple_coroot(i).scale(k)
    }

    /// Apply the simple reflection `w_i` to a root: `β − ⟨β, a_i∨⟩ a_i`.
    pub fn reflect_root(&self, i: usize, root: &RootAff) -> RootAff {
        let k = self.pairing(root, &self.simple_coroot(i));
        let ai = self.simple_root(i);
        let mut out = *root;
        out.m -= k * ai.m;
        for (x, y) in out.finite_mut().iter_mut().zip(ai.finite()) {
            *x -= k * y;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> AffineCartanData {
        AffineCartanData::from_name(&format!("A{n}")).unwrap()
    }

    #[test]
    fn parse_types() {
        assert!("A1".parse::<CartanType>().is_ok());
        assert!("D4".parse::<CartanType>().is_ok());
        assert!("E8".parse::<CartanType>().is_ok());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("B2".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
    }

    #[test]
    fn pairing_examples() {
        let d = a(1);
        let delta = d.delta();
        assert_eq!(d.pairing(&delta, &Coweight::new(1, &[0], 0)), 0);
        assert_eq!(d.pairing(&delta, &Coweight::new(0, &[0], 5)), 5);
        assert_eq!(d.pairing(&RootAff::new(&[1], 1), &Coweight::new(0, &[1], 1)), 3);
    }

    #[test]
    fn root_system_sizes() {
        let sizes = [("A1", 1), ("A2", 3), ("A3", 6), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)];
        for (name, n) in sizes {
            let d = AffineCartanData::from_name(name).unwrap();
            assert_eq!(d.finite_positive_roots().len(), n, "{name}");
        }
        let coxeter = [("A1", 2), ("A2", 3), ("D4", 6), ("E6", 12), ("E7", 18), ("E8", 30)];
        for (name, h) in coxeter {
            assert_eq!(AffineCartanData::from_name(name).unwrap().coxeter_number(), h, "{name}");
        }
    }

    #[test]
    fn theta_is_highest() {
        for name in ["A1", "A2", "A4", "D4", "D6", "E6", "E7", "E8"] {
            let d = AffineCartanData::from_name(name).unwrap();
            let th = d.theta().to_vec();
            for i in 0..d.rank() {
                let mut t = th.clone();
                t[i] += 1;
                assert!(!d.is_finite_root(&t), "{name}: θ+α_{i} is a root");
            }
        }
    }

    #[test]
    fn cartan_invariants() {
        for name in ["A1", "A2", "A5", "D4", "D7", "E6", "E7", "E8"] {
            let d = AffineCartanData::from_name(name).unwrap();
            let m = d.affine_cartan_matrix();
            let n = d.num_simple();
            for i in 0..n {
                assert_eq!(m[i][i], 2);
                for j in 0..n {
                    assert_eq!(m[i][j], m[j][i]);
                    if i != j {
                        if name == "A1" {
                            assert_eq!(m[i][j], -2);
                        } else {
                            assert!(m[i][j] == 0 || m[i][j] == -1, "{name} {i} {j}");
                        }
                    }
                }
            }
            assert_eq!(d.form(d.theta(), d.theta()), 2);
        }
    }

    #[test]
    fn coroot_examples() {
        let d = a(2);
        let a3 = d.simple_root(3);
        let c = d.coroot_of(&a3).unwrap();
        assert_eq!(c.to_coweight(), Coweight::new(1, &[-1, -1], 0));
        assert_eq!(d.root_of(&c).unwrap(), a3);
        assert!(d.coroot_of(&d.delta()).is_err());
        let d1 = a(1);
        let r = RootAff::new(&[1], 2);
        assert_eq!(d1.coroot_of(&r).unwrap(), CorootAff::new(&[1], 2));
    }

    #[test]
    fn enumeration_examples() {
        let d = a(1);
        let roots = d.positive_real_roots(RootBound::DeltaLevel(1));
        assert_eq!(roots, vec![RootAff::new(&[1], 0), RootAff::new(&[-1], 1), RootAff::new(&[1], 1)]);
        let d2 = a(2);
        assert_eq!(d2.positive_real_roots(RootBound::DeltaLevel(2)).len(), 15);
        let level0: Vec<_> = d2.positive_real_roots(RootBound::DeltaLevel(0));
        assert_eq!(level0.len(), 3);
        for r in d2.positive_real_roots(RootBound::Height(7)) {
            assert!(d2.is_positive_root(&r));
            assert!(d2.root_height(&r) <= 7);
        }
    }

    #[test]
    fn height_bound_is_complete() {
        let d = a(2);
        let listed = d.positive_real_roots(RootBound::Height(8));
        let mut brute = Vec::new();
        for m in 0..10 {
            for beta in d.finite_roots() {
                let r = RootAff::new(&beta, m);
                if d.is_positive_root(&r) && d.root_height(&r) <= 8 {
                    brute.push(r);
                }
            }
        }
        let mut l = listed.clone();
        l.sort();
        brute.sort();
        assert_eq!(l, brute);
    }

    #[test]
    fn multiplicity_examples() {
        let d = a(2);
        assert_eq!(d.multiplicity(&CorootAff::new(&[1, 0], 0)), Ok(1));
        assert_eq!(d.multiplicity(&CorootAff::new(&[0, 0], 3)), Ok(2));
        assert_eq!(a(1).multiplicity(&CorootAff::new(&[0], 1)), Ok(1));
        assert_eq!(d.multiplicity(&CorootAff::new(&[0, 0], 0)), Err(CartanError::ZeroCoroot));
    }

    #[test]
    fn rho_examples() {
        for n in 1..=4 {
            let d = a(n);
            for i in 1..=d.num_simple() {
                assert_eq!(d.rho_pairing(&d.simple_coroot(i)), 1);
            }
            assert_eq!(d.rho_pairing(&d.derivation()), 0);
        }
        assert_eq!(a(1).rho_pairing(&a(1).central()), 2);
    }

    #[test]
    fn dominance_examples() {
        let d = a(1);
        assert!(d.is_dominant(&d.zero()));
        assert!(d.is_dominant(&d.central().scale(-3)));
        assert!(!d.is_dominant(&Coweight::new(0, &[1], 0)));
        assert_eq!(d.simple_pairing(2, &Coweight::new(0, &[1], 0)), -2);
        assert_eq!(d.dominance_leq(&d.zero(), &d.central()), Some(vec![1, 1]));
        let lam = Coweight::new(2, &[1], 3);
        assert_eq!(d.dominance_leq(&lam, &lam), Some(vec![0, 0]));
        assert!(d.dominance_leq(&d.derivation(), &d.zero()).is_none());
    }

    #[test]
    fn tits_cone_examples() {
        let d = a(1);
        assert!(d.in_tits_cone(&Coweight::new(-4, &[7], 1)));
        assert!(d.in_tits_cone(&d.central().scale(5)));
        assert!(!d.in_tits_cone(&Coweight::new(0, &[1], 0)));
        assert!(!d.in_tits_cone(&Coweight::new(0, &[0], -1)));
    }

    #[test]
    fn height_examples() {
        assert_eq!(a(1).height(&a(1).central()), Ok(2));
        assert_eq!(a(2).height(&a(2).central()), Ok(3));
        for i in 1..=3 {
            assert_eq!(a(2).height(&a(2).simple_coroot(i)), Ok(1));
        }
        assert!(a(2).height(&Coweight::new(0, &[-1, 0], 0)).is_err());
    }

    // For m𝐜 ≤ λ with λ dominant, λ = n𝐜 with n ≥ m.
    #[test]
    fn central_below_dominant_forces_central() {
        for d in [a(1), a(2)] {
            let l = d.rank();
            let range = -3..=3i64;
            let mut count = 0;
            for c in range.clone() {
                for d_lvl in [0i64] {
                    let mut fins = vec![vec![]];
                    for _ in 0..l {
                        fins = fins
                            .into_iter()
                            .flat_map(|v: Vec<i64>| {
                                range.clone().map(move |x| {
                                    let mut w = v.clone();
                                    w.push(x);
                                    w
                                })
                            })
                            .collect();
                    }
                    for f in fins {
                        let lam = Coweight::new(c, &f, d_lvl);
                        if !d.is_dominant(&lam) {
                            continue;
                        }
                        for m in -4..=4 {
                            let mc = d.central().scale(m);
                            if d.is_leq(&mc, &lam) {
                                count += 1;
                                assert!(lam.is_central() && lam.c >= m, "{lam:?} {m}");
                            }
                        }
                    }
                }
            }
            assert!(count > 0);
        }
    }
}
