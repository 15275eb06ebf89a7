//! Building `θ_μ` for `μ` in the Tits cone out of dominant `Θ`'s, `T_a` and `T_a⁻¹`.
//!
//! For `w_a μ > μ`, with `ν = w_a μ` and `d = ⟨a, ν⟩`,
//! `θ_μ = T_a θ_ν T_a⁻¹ − (q − 1)(θ_ν + θ_{ν−a∨} + … + θ_{ν−(d−1)a∨}) T_a⁻¹`.
//! The tree is evaluated in the algebra and compared with the primitive `Θ_μ`.

use std::collections::{BTreeMap, HashMap};

use affine_cartan::Coweight;
use affine_series::VCoeff;

use crate::{HeckeAlgebra, HeckeElement, HeckeError};

/// Which simple root to peel when several satisfy `⟨a, μ⟩ < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaPolicy {
    SmallestIndex,
    LargestIndex,
}

/// One node of the construction DAG; children refer to other nodes by target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaExpr {
    Dominant,
    Step { a: usize, conjugated: Coweight, corrections: Vec<Coweight> },
}

#[derive(Clone, Debug)]
pub struct ThetaConstruction {
    pub root: Coweight,
    pub nodes: BTreeMap<Coweight, ThetaExpr>,
    pub value: HeckeElement,
    /// The evaluated tree equals `Θ_μ`.
    pub verified: bool,
}

impl ThetaConstruction {
    /// Longest chain of steps from the root to a dominant leaf.
    pub fn depth(&self) -> usize {
        let mut memo = HashMap::new();
        self.depth_of(&self.root, &mut memo)
    }

    fn depth_of(&self, mu: &Coweight, memo: &mut HashMap<Coweight, usize>) -> usize {
        if let Some(d) = memo.get(mu) {
            return *d;
        }
        let d = match &self.nodes[mu] {
            ThetaExpr::Dominant => 0,
            ThetaExpr::Step { conjugated, corrections, .. } => {
                let mut m = self.depth_of(conjugated, memo);
                for c in corrections {
                    m = m.max(self.depth_of(c, memo));
                }
                m + 1
            }
        };
        memo.insert(*mu, d);
        d
    }
}

impl HeckeAlgebra {
    pub fn theta_construct(
        &self,
        mu: &Coweight,
        policy: ThetaPolicy,
        budget: usize,
    ) -> Result<ThetaConstruction, HeckeError> {
        let data = self.cartan();
        if !data.in_tits_cone(mu) {
            return Err(HeckeError::NotInTitsCone(*mu));
        }
        let mut nodes = BTreeMap::new();
        let mut path = Vec::new();
        self.build(mu, policy, budget, &mut path, &mut nodes)?;
        let mut memo = HashMap::new();
        let value = self.evaluate(mu, &nodes, &mut memo);
        let verified = value == self.theta(*mu);
        Ok(ThetaConstruction { root: *mu, nodes, value, verified })
    }

    fn build(
        &self,
        mu: &Coweight,
        policy: ThetaPolicy,
        budget: usize,
        path: &mut Vec<Coweight>,
        nodes: &mut BTreeMap<Coweight, ThetaExpr>,
    ) -> Result<(), HeckeError> {
        if nodes.contains_key(mu) {
            return Ok(());
        }
        let data = self.cartan();
        let n = data.num_simple();
        let pick = |i: &usize| data.simple_pairing(*i, mu) < 0;
        let a = match policy {
            ThetaPolicy::SmallestIndex => (1..=n).find(pick),
            ThetaPolicy::LargestIndex => (1..=n).rev().find(pick),
        };
        let Some(a) = a else {
            nodes.insert(*mu, ThetaExpr::Dominant);
            return Ok(());
        };
        path.push(*mu);
        if path.len() > budget {
            return Err(HeckeError::Budget { budget, path: path.clone() });
        }
        let nu = data.reflect_coweight(a, mu);
        let d = data.simple_pairing(a, &nu);
        let av = data.simple_coroot(a);
        let corrections: Vec<Coweight> = (0..d).map(|j| nu - j * av).collect();
        for c in &corrections {
            self.build(c, policy, budget, path, nodes)?;
        }
        path.pop();
        nodes.insert(*mu, ThetaExpr::Step { a, conjugated: nu, corrections });
        Ok(())
    }

    fn evaluate(
        &self,
        mu: &Coweight,
        nodes: &BTreeMap<Coweight, ThetaExpr>,
        memo: &mut HashMap<Coweight, HeckeElement>,
    ) -> HeckeElement {
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let value = match &nodes[mu] {
            ThetaExpr::Dominant => self.theta(*mu),
            ThetaExpr::Step { a, conjugated, corrections } => {
                let tinv = self.t_simple_inv(*a);
                let inner = self.evaluate(conjugated, nodes, memo);
                let main = self.mul(&self.left_mul_simple(*a, &inner), &tinv);
                let mut sum = HeckeElement::zero();
                for c in corrections {
                    sum = sum.add(&self.evaluate(c, nodes, memo));
                }
                let qm1 = &VCoeff::mono(1, -2) - &VCoeff::one();
                main.sub(&self.mul(&sum, &tinv).scale(&qm1))
            }
        };
        memo.insert(*mu, value.clone());
        value
    }
}
