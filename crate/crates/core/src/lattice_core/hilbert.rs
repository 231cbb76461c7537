//! Minimal generators of `C ∩ M` for a full-dimensional pointed cone `C`.
//!
//! Primary route: pulling triangulation into simplicial cones, lattice points
//! of each half-open fundamental parallelepiped (via Smith form), then an
//! irreducibility filter. Fallback: bounded l1-ball scan, flagged uncertified.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice_core::cone::{canonical_cmp, Cone, Face};
use crate::lattice_core::smith::{smith, IntMatrix};
use crate::lattice_core::vector::{dot, LatticeVector};

/// Parallelepiped points above this total trigger the box fallback.
pub const PARALLELEPIPED_LIMIT: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupBasis {
    pub generators: Vec<LatticeVector>,
    pub certified: bool,
}

impl SemigroupBasis {
    /// Largest l1-norm among the generators.
    pub fn max_degree(&self) -> Int {
        self.generators
            .iter()
            .map(|g| g.l1_norm())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

fn triangulate(faces: &[Face], face: &Face) -> Vec<Vec<usize>> {
    if face.rays.len() == face.dim {
        return vec![face.rays.clone()];
    }
    let apex = face.rays[0];
    let mut out = Vec::new();
    for f in faces {
        if f.dim + 1 == face.dim && f.is_subface_of(face) && !f.contains_ray(apex) {
            for mut s in triangulate(faces, f) {
                s.push(apex);
                s.sort_unstable();
                out.push(s);
            }
        }
    }
    out
}

/// Simplicial cones (as ray-index sets) covering `cone`.
pub fn triangulation(cone: &Cone) -> Vec<Vec<usize>> {
    let faces = cone.faces();
    triangulate(&faces, &cone.full_face())
}

/// Lattice points of the half-open parallelepiped spanned by `gens`
/// (linearly independent, `n` of them), including zero.
fn parallelepiped_points(gens: &[LatticeVector], n: usize) -> Vec<LatticeVector> {
    let v = IntMatrix::from_cols(gens, n);
    let s = smith(&v);
    let d: Vec<Int> = s.diag.clone();
    let big = d[n - 1].clone();
    let mut out = Vec::new();
    let mut y = vec![Int::zero(); n];
    loop {
        // lambda = W * (y_i / d_i); scaled by the largest invariant factor
        let scaled: Vec<Int> = (0..n).map(|i| &y[i] * (&big / &d[i])).collect();
        let lam = s.v.mul_vec(&scaled);
        let mut x = LatticeVector::zero(n);
        for (j, l) in lam.iter().enumerate() {
            x.add_scaled(&gens[j], &l.mod_floor(&big));
        }
        let coords: Vec<Int> = x
            .iter()
            .map(|c| {
                debug_assert!(c.is_multiple_of(&big));
                c / &big
            })
            .collect();
        out.push(LatticeVector::new(coords));
        // odometer over the box prod [0, d_i)
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            y[i] += 1;
            if y[i] < d[i] {
                break;
            }
            y[i] = Int::zero();
            i += 1;
        }
    }
}

fn irreducible(cone: &Cone, candidates: &BTreeSet<LatticeVector>, cap: usize) -> Result<Vec<LatticeVector>> {
    // a reducible x = y + z has an irreducible summand y of smaller degree
    let mut grading = LatticeVector::zero(cone.rank());
    for f in cone.facet_normals() {
        grading.add_scaled(f, &Int::from(1));
    }
    let mut by_degree: Vec<(Int, &LatticeVector)> = candidates.iter().map(|x| (dot(&grading, x), x)).collect();
    by_degree.sort();
    let mut out: Vec<LatticeVector> = Vec::new();
    for (_, x) in by_degree {
        if !out.iter().any(|y| cone.contains(&(x - y))) {
            if out.len() == cap {
                return Err(Error::Overflow(format!("more than {cap} Hilbert basis elements")));
            }
            out.push(x.clone());
        }
    }
    out.sort_by(canonical_cmp);
    Ok(out)
}

/// Largest l1 ball the fallback scan will enumerate.
const L1_SCAN_LIMIT: u128 = 2_000_000;

/// `|{v ∈ Z^n : |v|_1 <= b}| = Σ_k 2^k C(n,k) C(b,k)`, saturating.
fn l1_ball_size(n: usize, b: u64) -> u128 {
    let choose = |n: u128, k: u128| (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1));
    (0..=n.min(b as usize) as u128)
        .map(|k| (1u128 << k.min(100)).saturating_mul(choose(n as u128, k)).saturating_mul(choose(b as u128, k)))
        .fold(0u128, |a, x| a.saturating_add(x))
}

/// All integer vectors of rank `n` with l1-norm at most `bound`.
pub fn l1_ball(n: usize, bound: u64) -> Vec<LatticeVector> {
    fn rec(n: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<LatticeVector>) {
        if prefix.len() == n {
            out.push(LatticeVector::from_i64(prefix));
            return;
        }
        for c in -left..=left {
            prefix.push(c);
            rec(n, left - c.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound as i64, &mut Vec::new(), &mut out);
    out
}

/// Hilbert basis of `cone ∩ Z^n`. `box_bound` only matters for the fallback.
pub fn hilbert_basis(cone: &Cone, box_bound: u64) -> Result<SemigroupBasis> {
    hilbert_basis_bounded(cone, box_bound, usize::MAX)
}

/// [`hilbert_basis`] that gives up with `Overflow` past `max_generators`.
pub fn hilbert_basis_bounded(cone: &Cone, box_bound: u64, max_generators: usize) -> Result<SemigroupBasis> {
    let n = cone.rank();
    let simplices = triangulation(cone);
    let mut total: u64 = 0;
    let mut overflow = false;
    for s in &simplices {
        let gens: Vec<LatticeVector> = s.iter().map(|&i| cone.rays()[i].clone()).collect();
        let det = smith(&IntMatrix::from_cols(&gens, n))
            .diag
            .iter()
            .fold(Int::from(1), |a, b| a * b);
        match det.to_u64() {
            Some(d) => total = total.saturating_add(d),
            None => overflow = true,
        }
    }
    if !overflow && total <= PARALLELEPIPED_LIMIT {
        let mut cand: BTreeSet<LatticeVector> = cone.rays().iter().cloned().collect();
        for s in &simplices {
            let gens: Vec<LatticeVector> = s.iter().map(|&i| cone.rays()[i].clone()).collect();
            for p in parallelepiped_points(&gens, n) {
                if !p.is_zero() {
                    cand.insert(p);
                }
            }
        }
        return Ok(SemigroupBasis {
            generators: irreducible(cone, &cand, max_generators)?,
            certified: true,
        });
    }
    if let Some(r) = cone.rays().iter().find(|r| r.l1_norm() > Int::from(box_bound)) {
        return Err(Error::HilbertBoxOverflow(format!(
            "ray {r} lies outside the l1 box of radius {box_bound}"
        )));
    }
    if l1_ball_size(n, box_bound) > L1_SCAN_LIMIT {
        return Err(Error::HilbertBoxOverflow(format!(
            "the l1 box of radius {box_bound} in rank {n} is too large to scan"
        )));
    }
    let cand: BTreeSet<LatticeVector> = l1_ball(n, box_bound)
        .into_iter()
        .filter(|v| !v.is_zero() && cone.contains(v))
        .collect();
    Ok(SemigroupBasis {
        generators: irreducible(cone, &cand, max_generators)?,
        certified: false,
    })
}
