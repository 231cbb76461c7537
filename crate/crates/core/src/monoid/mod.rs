//! The root monoid on `X_σ` defined by a regular face and compatible roots.

mod group;
mod variety;

pub use group::GroupElement;
pub use variety::{FaceChart, Point, ToricVariety, MAX_GENERATORS};
pub(crate) use variety::torus_value;

use num_traits::Zero;

use crate::arith::{binomial, sign_pow, to_i64, Int, Rat};
use crate::demazure::{is_compatible_set, DemazureRootPairSet};
use crate::error::{Error, Result};
use crate::lattice_core::{
    dot, is_regular_face, relative_interior_point, vector_rank, Cone, Face, LatticeVector,
};

#[derive(Clone, Debug)]
pub struct RootMonoid {
    variety: ToricVariety,
    tau: usize,
    roots: DemazureRootPairSet,
    /// Rays `p_1..p_k` of τ in pair order.
    tau_vectors: Vec<LatticeVector>,
    characters: Vec<LatticeVector>,
    /// Relative interior point of `τ^perp ∩ σ^∨`.
    u_prime: LatticeVector,
}

impl RootMonoid {
    pub fn build(sigma: Cone, tau: &Face, roots: DemazureRootPairSet) -> Result<Self> {
        sigma.check_face(tau)?;
        if !is_regular_face(&sigma, tau)? {
            return Err(Error::NonRegularFace(tau.rays.clone()));
        }
        let report = is_compatible_set(&sigma, tau, &roots);
        if !report.compatible {
            return Err(Error::IncompatibleRoots(Box::new(report)));
        }
        let variety = ToricVariety::new(sigma)?;
        let tau_id = variety.face_id(&tau.rays)?;
        let tau_vectors = roots
            .tau_rays
            .iter()
            .map(|&i| variety.cone().rays()[i].clone())
            .collect();
        let characters = roots.differences();
        let dual_face = variety.cone().dual_face(tau, variety.dual());
        let u_prime = relative_interior_point(variety.dual(), &dual_face);
        Ok(RootMonoid {
            variety,
            tau: tau_id,
            roots,
            tau_vectors,
            characters,
            u_prime,
        })
    }

    /// Convenience: `tau` given by its ray indices.
    pub fn from_parts(sigma: Cone, tau_rays: &[usize], roots: DemazureRootPairSet) -> Result<Self> {
        let tau = sigma.face(tau_rays)?;
        Self::build(sigma, &tau, roots)
    }

    pub fn variety(&self) -> &ToricVariety {
        &self.variety
    }

    pub fn cone(&self) -> &Cone {
        self.variety.cone()
    }

    pub fn tau(&self) -> &Face {
        self.variety.face(self.tau)
    }

    pub fn tau_id(&self) -> usize {
        self.tau
    }

    pub fn k(&self) -> usize {
        self.roots.pairs.len()
    }

    pub fn roots(&self) -> &DemazureRootPairSet {
        &self.roots
    }

    /// `p_r` for pair `r`.
    pub fn tau_vector(&self, r: usize) -> &LatticeVector {
        &self.tau_vectors[r]
    }

    /// `χ_r = e2^(r) - e1^(r)`.
    pub fn characters(&self) -> &[LatticeVector] {
        &self.characters
    }

    pub fn u_prime(&self) -> &LatticeVector {
        &self.u_prime
    }

    pub fn neutral(&self) -> Point {
        self.variety.distinguished_point(self.tau)
    }

    pub fn evaluate(&self, x: &Point, u: &LatticeVector) -> Result<Rat> {
        self.variety.evaluate(x, u)
    }

    /// `<p_r, u>` for every pair.
    pub fn tau_pairings(&self, u: &LatticeVector) -> Vec<Int> {
        self.tau_vectors.iter().map(|p| dot(p, u)).collect()
    }

    /// `χ^u(x * y)` by the binomial expansion of the comultiplication.
    pub fn product_value(&self, x: &Point, y: &Point, u: &LatticeVector) -> Result<Rat> {
        if !self.variety.in_semigroup(u) {
            return Err(Error::NotInSemigroup(u.to_string()));
        }
        let n: Vec<i64> = self
            .tau_pairings(u)
            .iter()
            .map(to_i64)
            .collect::<Result<_>>()?;
        let k = n.len();
        let mut i = vec![0i64; k];
        let mut total = Rat::zero();
        loop {
            let mut ux = u.clone();
            let mut uy = u.clone();
            let mut coef = Int::from(1);
            for r in 0..k {
                coef *= binomial(n[r], i[r]);
                ux.add_scaled(&self.roots.pairs[r].e2, &Int::from(i[r]));
                uy.add_scaled(&self.roots.pairs[r].e1, &Int::from(n[r] - i[r]));
            }
            let vx = self.variety.evaluate(x, &ux)?;
            if !vx.is_zero() {
                let vy = self.variety.evaluate(y, &uy)?;
                total += Rat::from_integer(coef) * vx * vy;
            }
            let mut r = 0;
            loop {
                if r == k {
                    return Ok(total);
                }
                if i[r] < n[r] {
                    i[r] += 1;
                    break;
                }
                i[r] = 0;
                r += 1;
            }
        }
    }

    pub fn multiply(&self, x: &Point, y: &Point) -> Result<Point> {
        self.variety.check_point(x)?;
        self.variety.check_point(y)?;
        let vals = self
            .variety
            .generators()
            .iter()
            .map(|g| self.product_value(x, y, g))
            .collect::<Result<Vec<_>>>()?;
        self.variety
            .point_from_generator_values(&vals)
            .map_err(|e| Error::Inconsistent(format!("product is not a point: {e}")))
    }

    pub fn is_invertible(&self, x: &Point) -> bool {
        self.variety
            .evaluate(x, &self.u_prime)
            .map(|v| !v.is_zero())
            .unwrap_or(false)
    }

    /// `χ^u(y^{-1}) = (-1)^{Σ<p_r,u>} χ^{-u - Σ<p_r,u>(e1+e2)}(y)` on generators.
    pub fn inverse(&self, y: &Point) -> Result<Point> {
        self.variety.check_point(y)?;
        if !self.is_invertible(y) {
            return Err(Error::NotInvertible);
        }
        let vals = self
            .variety
            .generators()
            .iter()
            .map(|g| {
                let n = self.tau_pairings(g);
                let mut w = -g;
                let mut total = 0i64;
                for (r, nr) in n.iter().enumerate() {
                    let pair = &self.roots.pairs[r];
                    let s = &pair.e1 + &pair.e2;
                    w.add_scaled(&s, &-nr);
                    total += to_i64(nr)?;
                }
                Ok(sign_pow(total) * self.variety.evaluate_local(y, &w)?)
            })
            .collect::<Result<Vec<_>>>()?;
        self.variety
            .point_from_generator_values(&vals)
            .map_err(|e| Error::Inconsistent(format!("inverse is not a point: {e}")))
    }

    pub fn is_active(&self) -> bool {
        vector_rank(&self.characters, self.variety.rank()) == self.k()
    }

    pub fn is_commutative(&self) -> bool {
        self.roots.pairs.iter().all(|p| p.e1 == p.e2)
    }

    pub fn is_idempotent(&self, x: &Point) -> Result<bool> {
        Ok(&self.multiply(x, x)? == x)
    }
}
