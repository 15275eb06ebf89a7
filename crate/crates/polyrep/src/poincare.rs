//! `W_o(t)` by enumeration, its exponents, and `W(t) = W_o(t)/∏(1 − t^{m_i})` with `t = v²`.

use affine_series::{LPoly, VCoeff};
use affine_weyl::WeylGroup;

use crate::PolyrepError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareData {
    /// Coefficients of `W_o(t)`.
    pub finite: Vec<u64>,
    /// `m_1 ≤ … ≤ m_ℓ` with `W_o(t) = ∏ (1 − t^{m_i+1})/(1 − t)`.
    pub exponents: Vec<u32>,
}

pub fn poincare_data(g: &WeylGroup) -> Result<PoincareData, PolyrepError> {
    let data = g.cartan();
    let stab = g.stabilizer_data(&data.derivation())?;
    let finite = stab.poincare.expect("W_o is finite");
    let exponents = exponents_of(&finite, data.rank()).ok_or_else(|| PolyrepError::Factorization(finite.clone()))?;
    Ok(PoincareData { finite, exponents })
}

/// Peel `(1 − t^d)` factors from `(1 − t)^ℓ W_o(t)`, smallest `d` first.
fn exponents_of(p: &[u64], rank: usize) -> Option<Vec<u32>> {
    let mut q: Vec<i64> = p.iter().map(|&x| x as i64).collect();
    for _ in 0..rank {
        let mut r = vec![0i64; q.len() + 1];
        for (i, &c) in q.iter().enumerate() {
            r[i] += c;
            r[i + 1] -= c;
        }
        q = r;
    }
    let mut exps = Vec::new();
    while q.len() > 1 || q.first() != Some(&1) {
        let d = (1..q.len()).find(|&i| q[i] != 0)?;
        if q[d] >= 0 {
            return None;
        }
        // divide by (1 − t^d)
        let mut out = vec![0i64; q.len() - d];
        let mut rem = q.clone();
        for i in 0..out.len() {
            out[i] = rem[i];
            rem[i + d] += rem[i];
        }
        if rem[out.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        exps.push(d as u32 - 1);
        q = out;
    }
    (exps.len() == rank).then_some(exps)
}

impl PoincareData {
    /// `W_o(v²)`.
    pub fn finite_v(&self) -> VCoeff {
        let terms: Vec<(i32, i64)> = self.finite.iter().enumerate().map(|(i, &c)| (2 * i as i32, c as i64)).collect();
        VCoeff::poly(LPoly::from_terms(&terms))
    }

    /// `W(v²) = W_o(v²)/∏(1 − v^{2m_i})`.
    pub fn affine_v(&self) -> VCoeff {
        let mut den = LPoly::one();
        for &m in &self.exponents {
            den = &den * &LPoly::from_terms(&[(0, 1), (2 * m as i32, -1)]);
        }
        VCoeff::ratio(self.finite_v().num().clone(), den).expect("nonzero denominator")
    }

    /// Power-series coefficients of `W(t)` through `t^n`: the number of elements of each length.
    pub fn affine_counts(&self, n: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..=n).map(|i| self.finite.get(i).map_or(0, |&c| c as i64)).collect();
        for &m in &self.exponents {
            let m = m as usize;
            for i in m..=n {
                s[i] += s[i - m];
            }
        }
        s
    }
}
