//! Coweights, affine roots and affine coroots in exact integer coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::MAX_RANK;

/// An element `c·𝐜 + λ_o + d·𝐝` of the coweight lattice.
///
/// The finite part is stored in simple-coroot coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    pub c: i64,
    fin: [i64; MAX_RANK],
    pub d: i64,
    rank: u8,
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1 && rank <= MAX_RANK, "rank {rank} out of range");
        Coweight { c: 0, fin: [0; MAX_RANK], d: 0, rank: rank as u8 }
    }

    pub fn new(c: i64, finite: &[i64], d: i64) -> Self {
        let mut cw = Self::zero(finite.len());
        cw.c = c;
        cw.fin[..finite.len()].copy_from_slice(finite);
        cw.d = d;
        cw
    }

    /// The central element `𝐜`.
    pub fn central(rank: usize) -> Self {
        let mut cw = Self::zero(rank);
        cw.c = 1;
        cw
    }

    /// The derivation element `𝐝`.
    pub fn derivation(rank: usize) -> Self {
        let mut cw = Self::zero(rank);
        cw.d = 1;
        cw
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn finite(&self) -> &[i64] {
        &self.fin[..self.rank as usize]
    }

    pub fn finite_mut(&mut self) -> &mut [i64] {
        let r = self.rank as usize;
        &mut self.fin[..r]
    }

    pub fn level(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.c == 0 && self.d == 0 && self.finite().iter().all(|&x| x == 0)
    }

    /// True iff the coweight is an integer multiple of `𝐜`.
    pub fn is_central(&self) -> bool {
        self.d == 0 && self.finite().iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = *self;
        out.c *= k;
        out.d *= k;
        for x in out.finite_mut() {
            *x *= k;
        }
        out
    }
}

impl Add for Coweight {
    type Output = Coweight;
    fn add(mut self, rhs: Coweight) -> Coweight {
        self += rhs;
        self
    }
}

impl AddAssign for Coweight {
    fn add_assign(&mut self, rhs: Coweight) {
        debug_assert_eq!(self.rank, rhs.rank);
        self.c += rhs.c;
        self.d += rhs.d;
        for i in 0..self.rank as usize {
            self.fin[i] += rhs.fin[i];
        }
    }
}

impl Sub for Coweight {
    type Output = Coweight;
    fn sub(mut self, rhs: Coweight) -> Coweight {
        self -= rhs;
        self
    }
}

impl SubAssign for Coweight {
    fn sub_assign(&mut self, rhs: Coweight) {
        debug_assert_eq!(self.rank, rhs.rank);
        self.c -= rhs.c;
        self.d -= rhs.d;
        for i in 0..self.rank as usize {
            self.fin[i] -= rhs.fin[i];
        }
    }
}

impl Neg for Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        self.scale(-1)
    }
}

impl Mul<Coweight> for i64 {
    type Output = Coweight;
    fn mul(self, rhs: Coweight) -> Coweight {
        rhs.scale(self)
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}, {})", self.c, self.finite(), self.d)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An affine root `α + mδ`, with `α` in simple-root coordinates.
///
/// `α = 0` encodes an imaginary root when `m ≠ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootAff {
    fin: [i64; MAX_RANK],
    pub m: i64,
    rank: u8,
}

impl RootAff {
    pub fn new(finite: &[i64], m: i64) -> Self {
        assert!(!finite.is_empty() && finite.len() <= MAX_RANK);
        let mut fin = [0; MAX_RANK];
        fin[..finite.len()].copy_from_slice(finite);
        RootAff { fin, m, rank: finite.len() as u8 }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn finite(&self) -> &[i64] {
        &self.fin[..self.rank as usize]
    }

    pub fn finite_mut(&mut self) -> &mut [i64] {
        let r = self.rank as usize;
        &mut self.fin[..r]
    }

    pub fn finite_is_zero(&self) -> bool {
        self.finite().iter().all(|&x| x == 0)
    }

    /// Sign of the finite part: +1 if all coordinates are nonnegative and some positive,
    /// -1 if the reverse, 0 for the zero vector or a mixed-sign vector.
    pub fn finite_sign(&self) -> i32 {
        finite_sign(self.finite())
    }
}

impl Add for RootAff {
    type Output = RootAff;
    fn add(mut self, rhs: RootAff) -> RootAff {
        self.m += rhs.m;
        for i in 0..self.rank as usize {
            self.fin[i] += rhs.fin[i];
        }
        self
    }
}

impl Neg for RootAff {
    type Output = RootAff;
    fn neg(mut self) -> RootAff {
        self.m = -self.m;
        for x in self.finite_mut() {
            *x = -*x;
        }
        self
    }
}

impl fmt::Debug for RootAff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}+{}δ", self.finite(), self.m)
    }
}

impl fmt::Display for RootAff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An affine coroot `α∨ + m𝐜`, with `α∨` in simple-coroot coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootAff {
    fin: [i64; MAX_RANK],
    pub cm: i64,
    rank: u8,
}

impl CorootAff {
    pub fn new(finite: &[i64], cm: i64) -> Self {
        assert!(!finite.is_empty() && finite.len() <= MAX_RANK);
        let mut fin = [0; MAX_RANK];
        fin[..finite.len()].copy_from_slice(finite);
        CorootAff { fin, cm, rank: finite.len() as u8 }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn finite(&self) -> &[i64] {
        &self.fin[..self.rank as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.cm == 0 && self.finite().iter().all(|&x| x == 0)
    }

    pub fn is_imaginary(&self) -> bool {
        self.cm != 0 && self.finite().iter().all(|&x| x == 0)
    }

    /// The coroot as a level-zero coweight.
    pub fn to_coweight(&self) -> Coweight {
        Coweight::new(self.cm, self.finite(), 0)
    }

    /// Inverse of [`CorootAff::to_coweight`]; `None` when the level is nonzero.
    pub fn from_coweight(cw: &Coweight) -> Option<Self> {
        if cw.d != 0 {
            return None;
        }
        Some(CorootAff::new(cw.finite(), cw.c))
    }
}

impl Neg for CorootAff {
    type Output = CorootAff;
    fn neg(mut self) -> CorootAff {
        self.cm = -self.cm;
        let r = self.rank as usize;
        for x in &mut self.fin[..r] {
            *x = -*x;
        }
        self
    }
}

impl fmt::Debug for CorootAff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}∨+{}c", self.finite(), self.cm)
    }
}

pub(crate) fn finite_sign(v: &[i64]) -> i32 {
    let pos = v.iter().any(|&x| x > 0);
    let neg = v.iter().any(|&x| x < 0);
    match (pos, neg) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}
