//! Seeded random points, group elements and monoid instances for tests and
//! verification harnesses.

use num_integer::Integer;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rat, Int, Rat};
use crate::demazure::compatible_pairs_with_differences;
use crate::error::Result;
use crate::lattice_core::{is_regular_face, kernel_basis, triangulation, Cone, LatticeVector};
use crate::lattice_core::smith::{determinant, smith, IntMatrix};
use crate::monoid::{torus_value, GroupElement, Point, RootMonoid, ToricVariety};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational `p/q` with `p, q ∈ [-9, 9] \ {0}`.
pub fn nonzero_rat(rng: &mut SampleRng) -> Rat {
    let pick = |rng: &mut SampleRng| {
        let v: i64 = rng.gen_range(1..=9);
        if rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    };
    let n = pick(rng);
    let d = pick(rng);
    rat(n, d)
}

/// A rational that is zero about a quarter of the time.
pub fn maybe_zero_rat(rng: &mut SampleRng) -> Rat {
    if rng.gen_bool(0.25) {
        rat(0, 1)
    } else {
        nonzero_rat(rng)
    }
}

pub fn point_on_face(x: &ToricVariety, face: usize, rng: &mut SampleRng) -> Point {
    let m = x.chart(face).basis.len();
    Point {
        face,
        values: (0..m).map(|_| nonzero_rat(rng)).collect(),
    }
}

/// A point in a uniformly chosen orbit.
pub fn random_point(x: &ToricVariety, rng: &mut SampleRng) -> Point {
    let face = rng.gen_range(0..x.faces().len());
    point_on_face(x, face, rng)
}

pub fn random_group_element(m: &RootMonoid, rng: &mut SampleRng) -> GroupElement {
    let dim = m.variety().chart(m.tau_id()).basis.len();
    GroupElement {
        alpha: (0..m.k()).map(|_| maybe_zero_rat(rng)).collect(),
        torus: (0..dim).map(|_| nonzero_rat(rng)).collect(),
    }
}

pub fn random_invertible_point(m: &RootMonoid, rng: &mut SampleRng) -> Result<Point> {
    m.to_point(&random_group_element(m, rng))
}

/// Values on the standard basis of `Z^d` of a random character `Z^d -> Q^×`
/// that is trivial on the row span of `rows`. Torsion directions of the
/// quotient get `±1`, free directions get random nonzero values.
pub fn character_trivial_on(rows: &[Vec<Int>], d: usize, rng: &mut SampleRng) -> Vec<Rat> {
    let mut e = IntMatrix::zeros(rows.len(), d);
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.iter().enumerate() {
            e[(i, j)] = c.clone();
        }
    }
    let s = smith(&e);
    let sigma: Vec<Rat> = (0..d)
        .map(|i| {
            if i < s.rank {
                if s.diag[i].is_even() && rng.gen_bool(0.5) {
                    -Rat::one()
                } else {
                    Rat::one()
                }
            } else {
                nonzero_rat(rng)
            }
        })
        .collect();
    (0..d)
        .map(|j| {
            let coords: Vec<Int> = (0..d).map(|i| s.v[(j, i)].clone()).collect();
            torus_value(&sigma, &coords)
        })
        .collect()
}

/// A random full-dimensional pointed cone of the given rank with small rays.
pub fn random_cone(rank: usize, rng: &mut SampleRng) -> Cone {
    loop {
        let extra = rng.gen_range(0..=2);
        let mut gens: Vec<LatticeVector> = Vec::new();
        for _ in 0..rank + extra {
            let v: Vec<i64> = loop {
                let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-1..=2)).collect();
                if v.iter().sum::<i64>() > 0 {
                    break v;
                }
            };
            gens.push(LatticeVector::from_i64(&v));
        }
        if let Ok(c) = Cone::from_generators(rank, &gens) {
            return c;
        }
    }
}

/// Sum of simplex multiplicities over a triangulation of the dual cone,
/// which bounds the work of a Hilbert basis computation.
fn dual_volume(cone: &Cone) -> Int {
    let dual = cone.dual();
    let n = cone.rank();
    triangulation(&dual)
        .iter()
        .map(|s| {
            let gens: Vec<LatticeVector> = s.iter().map(|&i| dual.rays()[i].clone()).collect();
            determinant(&IntMatrix::from_cols(&gens, n)).abs()
        })
        .sum()
}

/// A random root monoid of rank at most `max_rank` with `k >= 1`.
pub fn random_monoid(max_rank: usize, rng: &mut SampleRng) -> RootMonoid {
    loop {
        let rank = rng.gen_range(1..=max_rank.max(1));
        let cone = random_cone(rank, rng);
        if cone.rays().len() > rank + 2 || dual_volume(&cone) > Int::from(12) {
            continue;
        }
        let regular: Vec<_> = cone
            .faces()
            .into_iter()
            .filter(|f| !f.rays.is_empty() && is_regular_face(&cone, f).unwrap_or(false))
            .collect();
        let Some(tau) = regular.choose(rng).cloned() else {
            continue;
        };
        let perp = kernel_basis(&cone.face_rays(&tau), rank);
        let diffs: Vec<LatticeVector> = tau
            .rays
            .iter()
            .map(|_| {
                let mut c = LatticeVector::zero(rank);
                for b in &perp {
                    c.add_scaled(b, &Int::from(rng.gen_range(-1..=1)));
                }
                c
            })
            .collect();
        let Ok(roots) = compatible_pairs_with_differences(&cone, &tau, &diffs) else {
            continue;
        };
        match RootMonoid::build(cone, &tau, roots) {
            Ok(m) if m.variety().generators().len() <= 10 => return m,
            _ => continue,
        }
    }
}
