//! The two example families: root monoids on affine space and on the
//! cylinder over the quadratic cone `x1 x2 = x4 x5`.

use serde::{Deserialize, Serialize};

use crate::demazure::{DemazureRootPairSet, RootPair};
use crate::error::{Error, Result};
use crate::lattice_core::{Cone, LatticeVector};
use crate::monoid::RootMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Preset {
    /// `a[r]`, `b[r]` have length `n - k`.
    AffineSpace {
        n: usize,
        k: usize,
        a: Vec<Vec<i64>>,
        b: Vec<Vec<i64>>,
    },
    QuadricCylinder(CylinderParams),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderParams {
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
    pub c1: i64,
    pub d1: i64,
    pub c2: i64,
    pub d2: i64,
}

impl CylinderParams {
    pub fn from_slice(v: &[i64]) -> Result<Self> {
        let [a1, b1, a2, b2, c1, d1, c2, d2] = v.try_into().map_err(|_| {
            Error::InvalidPreset(format!("expected 8 cylinder parameters, got {}", v.len()))
        })?;
        Ok(CylinderParams {
            a1,
            b1,
            a2,
            b2,
            c1,
            d1,
            c2,
            d2,
        })
    }

    pub fn to_vec(self) -> Vec<i64> {
        vec![
            self.a1, self.b1, self.a2, self.b2, self.c1, self.d1, self.c2, self.d2,
        ]
    }
}

impl Preset {
    pub fn build(&self) -> Result<RootMonoid> {
        match self {
            Preset::AffineSpace { n, k, a, b } => affine_space_monoid(*n, *k, a, b),
            Preset::QuadricCylinder(p) => quadric_cylinder_monoid(*p),
        }
    }
}

/// Orthant in rank `n`, `τ` spanned by the first `k` rays,
/// `e1^(r) = (-δ_r, a_r)`, `e2^(r) = (-δ_r, b_r)`.
pub fn affine_space_monoid(
    n: usize,
    k: usize,
    a: &[Vec<i64>],
    b: &[Vec<i64>],
) -> Result<RootMonoid> {
    if n == 0 || k > n {
        return Err(Error::InvalidPreset(format!("need 0 <= k <= n and n >= 1, got n={n}, k={k}")));
    }
    if a.len() != k || b.len() != k {
        return Err(Error::InvalidPreset(format!(
            "expected {k} exponent rows for a and b, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut pairs = Vec::with_capacity(k);
    for r in 0..k {
        for row in [&a[r], &b[r]] {
            if row.len() != n - k {
                return Err(Error::InvalidPreset(format!(
                    "exponent rows must have length n - k = {}, got {}",
                    n - k,
                    row.len()
                )));
            }
            if row.iter().any(|&x| x < 0) {
                return Err(Error::InvalidPreset("exponents must be nonnegative".into()));
            }
        }
        let root = |tail: &[i64]| {
            let mut v = vec![0i64; n];
            v[r] = -1;
            v[k..].copy_from_slice(tail);
            LatticeVector::from_i64(&v)
        };
        pairs.push(RootPair {
            e1: root(&a[r]),
            e2: root(&b[r]),
        });
    }
    let roots = DemazureRootPairSet {
        tau_rays: (0..k).collect(),
        pairs,
    };
    RootMonoid::from_parts(Cone::orthant(n), &(0..k).collect::<Vec<_>>(), roots)
}

/// The cone with rays `(1,0,0,0), (0,1,0,0), (0,0,1,0), (0,1,0,1), (1,0,0,1)`.
pub fn quadric_cylinder_cone() -> Cone {
    Cone::from_i64(
        4,
        &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 1, 0, 1],
            &[1, 0, 0, 1],
        ],
    )
    .expect("fixed cone is valid")
}

pub fn quadric_cylinder_monoid(p: CylinderParams) -> Result<RootMonoid> {
    if p.a1 < 0 || p.a2 < 0 || p.c1 < 0 || p.c2 < 0 {
        return Err(Error::InvalidPreset("a1, a2, c1, c2 must be >= 0".into()));
    }
    if p.b1 <= 0 || p.b2 <= 0 || p.d1 <= 0 || p.d2 <= 0 {
        return Err(Error::InvalidPreset("b1, b2, d1, d2 must be > 0".into()));
    }
    let v = |x: [i64; 4]| LatticeVector::from_i64(&x);
    let roots = DemazureRootPairSet {
        tau_rays: vec![0, 1],
        pairs: vec![
            RootPair {
                e1: v([-1, 0, p.a1, p.b1]),
                e2: v([-1, 0, p.a2, p.b2]),
            },
            RootPair {
                e1: v([0, -1, p.c1, p.d1]),
                e2: v([0, -1, p.c2, p.d2]),
            },
        ],
    };
    RootMonoid::from_parts(quadric_cylinder_cone(), &[0, 1], roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        let p = CylinderParams::from_slice(&[0, 0, 0, 1, 0, 1, 0, 1]).unwrap();
        assert!(quadric_cylinder_monoid(p).is_err());
        assert!(CylinderParams::from_slice(&[1, 2, 3]).is_err());
        assert!(affine_space_monoid(2, 1, &[vec![-1]], &[vec![0]]).is_err());
        assert!(affine_space_monoid(2, 1, &[vec![0, 0]], &[vec![0]]).is_err());
    }

    #[test]
    fn cylinder_builds() {
        let p = CylinderParams::from_slice(&[0, 1, 1, 1, 0, 1, 2, 3]).unwrap();
        let m = quadric_cylinder_monoid(p).unwrap();
        assert_eq!(m.k(), 2);
        assert!(m.is_active());
        assert!(!m.is_commutative());
    }
}
