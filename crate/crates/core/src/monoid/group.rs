//! Semidirect-product coordinates `(α, t)` on the unit group `X_τ`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat_pow, Rat};
use crate::error::{Error, Result};
use crate::monoid::{torus_value, Point, RootMonoid};

/// `α` has one entry per root pair; `torus` holds the values of `t` on the
/// chart basis of `M ∩ τ^perp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElement {
    #[serde(with = "crate::arith::rat_vec")]
    pub alpha: Vec<Rat>,
    #[serde(with = "crate::arith::rat_vec")]
    pub torus: Vec<Rat>,
}

impl RootMonoid {
    pub fn group_identity(&self) -> GroupElement {
        GroupElement {
            alpha: vec![Rat::zero(); self.k()],
            torus: vec![Rat::one(); self.variety().chart(self.tau_id()).basis.len()],
        }
    }

    fn check_group_element(&self, g: &GroupElement) -> Result<()> {
        let m = self.variety().chart(self.tau_id()).basis.len();
        if g.alpha.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                found: g.alpha.len(),
            });
        }
        if g.torus.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: g.torus.len(),
            });
        }
        if g.torus.iter().any(Zero::is_zero) {
            return Err(Error::ZeroValue("torus component".into()));
        }
        Ok(())
    }

    /// `χ_r(t)` for every pair.
    pub fn character_values(&self, torus: &[Rat]) -> Result<Vec<Rat>> {
        let basis = &self.variety().chart(self.tau_id()).basis;
        self.characters()
            .iter()
            .map(|c| Ok(torus_value(torus, &basis.coords(c)?)))
            .collect()
    }

    /// `(α, t)(α', t') = (α + χ(t) α', t t')`.
    pub fn group_multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check_group_element(g)?;
        self.check_group_element(h)?;
        let chi = self.character_values(&g.torus)?;
        Ok(GroupElement {
            alpha: g
                .alpha
                .iter()
                .zip(&h.alpha)
                .zip(&chi)
                .map(|((a, b), c)| a + c * b)
                .collect(),
            torus: g.torus.iter().zip(&h.torus).map(|(a, b)| a * b).collect(),
        })
    }

    /// For a generator `u`: `χ^u = t^{u + Σ<p_r,u> e1^(r)} · Π α_r^{<p_r,u>}`.
    pub fn to_point(&self, g: &GroupElement) -> Result<Point> {
        self.check_group_element(g)?;
        let basis = &self.variety().chart(self.tau_id()).basis;
        let vals = self
            .variety()
            .generators()
            .iter()
            .map(|u| {
                let n = self.tau_pairings(u);
                let mut m = u.clone();
                let mut acc = Rat::one();
                for (r, nr) in n.iter().enumerate() {
                    m.add_scaled(&self.roots().pairs[r].e1, nr);
                    acc *= rat_pow(&g.alpha[r], nr);
                }
                Ok(acc * torus_value(&g.torus, &basis.coords(&m)?))
            })
            .collect::<Result<Vec<_>>>()?;
        self.variety().point_from_generator_values(&vals)
    }

    /// `α_r = χ^{-e1^(r)}(x)`, `t = χ^b(x)` on the chart basis of `τ^perp`.
    pub fn from_point(&self, x: &Point) -> Result<GroupElement> {
        self.variety().check_point(x)?;
        if !self.is_invertible(x) {
            return Err(Error::NotInvertible);
        }
        let alpha = self
            .roots()
            .pairs
            .iter()
            .map(|p| self.variety().evaluate_local(x, &-&p.e1))
            .collect::<Result<Vec<_>>>()?;
        let torus = self
            .variety()
            .chart(self.tau_id())
            .basis
            .vectors()
            .iter()
            .map(|b| self.variety().evaluate_local(x, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement { alpha, torus })
    }
}
