//! One-parameter actions on points: the acting torus, ray subtori `R_p`
//! and root subgroups `H_e`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, rat_pow, to_i64, Int, Rat};
use crate::demazure::is_demazure_root;
use crate::error::{Error, Result};
use crate::lattice_core::{dot, Cone, Face, LatticeVector};
use crate::monoid::{Point, ToricVariety};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPair {
    pub gamma1: Face,
    pub gamma2: Face,
}

/// `χ^u(t·x) = t^u χ^u(x)`, with `t` given on the standard basis of `M`.
pub fn ambient_torus_action(v: &ToricVariety, t: &[Rat], x: &Point) -> Result<Point> {
    v.check_point(x)?;
    if t.len() != v.rank() {
        return Err(Error::DimensionMismatch {
            expected: v.rank(),
            found: t.len(),
        });
    }
    if t.iter().any(Zero::is_zero) {
        return Err(Error::ZeroValue("torus component".into()));
    }
    let basis = &v.chart(x.face).basis;
    let values = x
        .values
        .iter()
        .zip(basis.vectors())
        .map(|(val, b)| {
            let mut acc = val.clone();
            for (ti, bi) in t.iter().zip(b.iter()) {
                acc *= rat_pow(ti, bi);
            }
            acc
        })
        .collect();
    Ok(Point {
        face: x.face,
        values,
    })
}

/// `χ^u(R_p(t)·x) = t^{<p,u>} χ^u(x)`.
pub fn ray_subtorus_action(v: &ToricVariety, p: &LatticeVector, t: &Rat, x: &Point) -> Result<Point> {
    v.check_point(x)?;
    p.check_rank(v.rank())?;
    if t.is_zero() {
        return Err(Error::ZeroValue("subtorus parameter".into()));
    }
    if !p.is_primitive() {
        return Err(Error::NotPrimitive(p.to_string()));
    }
    let basis = &v.chart(x.face).basis;
    let values = x
        .values
        .iter()
        .zip(basis.vectors())
        .map(|(val, b)| val * rat_pow(t, &dot(p, b)))
        .collect();
    Ok(Point {
        face: x.face,
        values,
    })
}

/// `χ^u(H_e(a)·x) = Σ_k C(n,k) a^k χ^{u+ke}(x)` with `n = <ρ,u>`; on the
/// chart where `χ^e` is regular this is `χ^u(x)(1 + a χ^e(x))^n`.
pub fn root_subgroup_action(v: &ToricVariety, e: &LatticeVector, a: &Rat, x: &Point) -> Result<Point> {
    v.check_point(x)?;
    let rho = is_demazure_root(v.cone(), e).ok_or_else(|| Error::NotARoot(e.to_string()))?;
    if a.is_zero() {
        return Ok(x.clone());
    }
    let p = &v.cone().rays()[rho];
    let vals = v
        .generators()
        .iter()
        .map(|g| {
            let n = to_i64(&dot(p, g))?;
            let mut total = Rat::zero();
            let mut u = g.clone();
            let mut apow = Rat::one();
            for k in 0..=n {
                let val = v.evaluate(x, &u)?;
                if !val.is_zero() {
                    total += Rat::from_integer(binomial(n, k)) * &apow * val;
                }
                u = &u + e;
                apow *= a;
            }
            Ok(total)
        })
        .collect::<Result<Vec<_>>>()?;
    v.point_from_generator_values(&vals)
        .map_err(|err| Error::Inconsistent(format!("root subgroup image is not a point: {err}")))
}

/// The parameter `a` with `1 + a χ^e(x) = 0`, when `χ^e` is regular and
/// nonzero at `x` and the root's ray lies outside the orbit's face.
pub fn degenerate_parameter(v: &ToricVariety, e: &LatticeVector, x: &Point) -> Result<Option<Rat>> {
    let rho = is_demazure_root(v.cone(), e).ok_or_else(|| Error::NotARoot(e.to_string()))?;
    if v.face(x.face).contains_ray(rho) {
        return Ok(None);
    }
    let val = v.evaluate_local(x, e)?;
    if val.is_zero() {
        return Ok(None);
    }
    Ok(Some(-Rat::one() / val))
}

/// Faces `γ` with `ρ ∉ γ`, `e ∈ γ^perp` and `cone(γ, ρ)` a face, paired with `cone(γ, ρ)`.
pub fn he_connected_pairs(sigma: &Cone, e: &LatticeVector) -> Result<Vec<OrbitPair>> {
    let rho = is_demazure_root(sigma, e).ok_or_else(|| Error::NotARoot(e.to_string()))?;
    let mut out = Vec::new();
    for g in sigma.faces() {
        if g.contains_ray(rho) || !sigma.is_orthogonal_to_face(&g, e) {
            continue;
        }
        let mut rays = g.rays.clone();
        rays.push(rho);
        rays.sort_unstable();
        if let Ok(g2) = sigma.face(&rays) {
            out.push(OrbitPair {
                gamma1: g,
                gamma2: g2,
            });
        }
    }
    Ok(out)
}

/// Exponent of `t` in the conjugation `R_p(t) H_e(a) R_p(t)^{-1} = H_e(a t^{-<p,e>})`.
pub fn conjugation_exponent(p: &LatticeVector, e: &LatticeVector) -> Int {
    -dot(p, e)
}
