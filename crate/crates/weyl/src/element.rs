use std::fmt;

use affine_cartan::MAX_RANK;

const STRIDE: usize = MAX_RANK;

/// An element `t_H ∘ u` of `W = W_o ⋉ Q_o∨`.
///
/// `u` is stored as its integer matrix on simple-coroot coordinates (which is also its
/// matrix on simple-root coordinates in the simply-laced case), `H` in simple-coroot
/// coordinates. Equality is equality of this pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: u8,
    mat: [i8; STRIDE * STRIDE],
    h: [i64; MAX_RANK],
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&rank));
        let mut mat = [0i8; STRIDE * STRIDE];
        for i in 0..rank {
            mat[i * STRIDE + i] = 1;
        }
        WeylElement { rank: rank as u8, mat, h: [0; MAX_RANK] }
    }

    pub(crate) fn from_parts(rank: usize, m: &[Vec<i64>], h: &[i64]) -> Self {
        let mut w = Self::identity(rank);
        for i in 0..rank {
            for j in 0..rank {
                w.mat[i * STRIDE + j] = i8::try_from(m[i][j]).expect("Weyl matrix entry fits in i8");
            }
            w.h[i] = h[i];
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.mat[i * STRIDE + j] as i64
    }

    pub fn finite_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// The translation part `H`.
    pub fn translation(&self) -> &[i64] {
        &self.h[..self.rank()]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    pub fn is_translation(&self) -> bool {
        let l = self.rank();
        (0..l).all(|i| (0..l).all(|j| self.entry(i, j) == (i == j) as i64))
    }

    /// The finite part `u` as an element with zero translation.
    pub fn finite_part(&self) -> Self {
        let mut w = *self;
        w.h = [0; MAX_RANK];
        w
    }

    /// `M·x` on a finite coordinate vector.
    #[inline]
    pub fn apply_matrix(&self, x: &[i64]) -> [i64; MAX_RANK] {
        let l = self.rank();
        let mut out = [0i64; MAX_RANK];
        for (i, o) in out.iter_mut().enumerate().take(l) {
            let row = &self.mat[i * STRIDE..i * STRIDE + l];
            *o = row.iter().zip(x).map(|(&a, &b)| a as i64 * b).sum();
        }
        out
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let l = self.rank();
        debug_assert_eq!(l, other.rank());
        let mut out = Self::identity(l);
        for i in 0..l {
            for j in 0..l {
                let mut s = 0i64;
                for k in 0..l {
                    s += self.entry(i, k) * other.entry(k, j);
                }
                out.mat[i * STRIDE + j] = s as i8;
            }
        }
        let mh = self.apply_matrix(other.translation());
        for i in 0..l {
            out.h[i] = self.h[i] + mh[i];
        }
        out
    }

    pub(crate) fn with_translation(&self, h: &[i64]) -> Self {
        let mut w = *self;
        w.h = [0; MAX_RANK];
        w.h[..h.len()].copy_from_slice(h);
        w
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}∘{:?}", self.translation(), self.finite_matrix())
    }
}
