//! Equations of the center of a root monoid and a commutation oracle.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rat, rat, to_i64, Int};
use crate::error::{Error, Result};
use crate::lattice_core::{dot, vector_rank, LatticeVector};
use crate::monoid::{GroupElement, Point, RootMonoid};
use crate::sampling::{character_trivial_on, random_group_element, random_point, rng, SampleRng};

/// `χ^{u + e1^(r)} = χ^{u + e2^(r)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterEquality {
    pub r: usize,
    pub u: LatticeVector,
    pub lhs: LatticeVector,
    pub rhs: LatticeVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterLocus {
    /// `χ^u = 0`.
    pub vanishing: Vec<LatticeVector>,
    pub equalities: Vec<CenterEquality>,
    pub index_bound: u64,
}

impl CenterLocus {
    pub fn contains(&self, m: &RootMonoid, x: &Point) -> Result<bool> {
        for u in &self.vanishing {
            if !m.evaluate(x, u)?.is_zero() {
                return Ok(false);
            }
        }
        for eq in &self.equalities {
            if m.evaluate(x, &eq.lhs)? != m.evaluate(x, &eq.rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Smallest admissible bound: the largest l1-norm of a semigroup generator.
pub fn min_center_bound(m: &RootMonoid) -> u64 {
    m.variety().semigroup().max_degree().to_u64().unwrap_or(u64::MAX)
}

pub fn default_center_bound(m: &RootMonoid) -> u64 {
    2 * min_center_bound(m) + 2
}

/// `Σ_r <p_r, u> (e2^(r) - e1^(r))`.
fn twist(m: &RootMonoid, u: &LatticeVector) -> LatticeVector {
    let mut out = LatticeVector::zero(u.rank());
    for (r, c) in m.characters().iter().enumerate() {
        out.add_scaled(c, &dot(m.tau_vector(r), u));
    }
    out
}

/// Integer lattice points with l1-norm at most `bound` that pass `keep`,
/// enumerated with machine integers.
fn scan_l1(n: usize, bound: i64, keep: &mut dyn FnMut(&[i64])) {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, keep: &mut dyn FnMut(&[i64])) {
        if cur.len() == n {
            keep(cur);
            return;
        }
        for c in -left..=left {
            cur.push(c);
            rec(n, left - c.abs(), cur, keep);
            cur.pop();
        }
    }
    rec(n, bound, &mut Vec::with_capacity(n), keep);
}

pub fn center_equations(m: &RootMonoid, degree_bound: u64) -> Result<CenterLocus> {
    let required = min_center_bound(m);
    if degree_bound < required {
        return Err(Error::DegreeBoundTooSmall {
            bound: degree_bound as i64,
            required: required as i64,
        });
    }
    let vanishing: Vec<LatticeVector> = m
        .variety()
        .generators()
        .iter()
        .filter(|g| !twist(m, g).is_zero())
        .cloned()
        .collect();

    let n = m.variety().rank();
    let k = m.k();
    let to_small = |v: &LatticeVector| v.iter().map(to_i64).collect::<Result<Vec<i64>>>();
    let rays: Vec<Vec<i64>> = m
        .cone()
        .rays()
        .iter()
        .map(to_small)
        .collect::<Result<_>>()?;
    let tau: Vec<Vec<i64>> = (0..k).map(|r| to_small(m.tau_vector(r))).collect::<Result<_>>()?;
    let chars: Vec<Vec<i64>> = m.characters().iter().map(to_small).collect::<Result<_>>()?;
    let nontrivial: Vec<usize> = (0..k).filter(|&r| chars[r].iter().any(|&c| c != 0)).collect();

    // (r, u) with u ∈ S_σ, <p_r, u> >= 1 and Σ_j (<p_j, u> - δ_jr) c_j = 0;
    // for linearly independent c_j this is <p_j, u> = δ_jr
    let mut index: Vec<Vec<Vec<i64>>> = vec![Vec::new(); k];
    let bound = i64::try_from(degree_bound)
        .map_err(|_| Error::Overflow("degree bound".into()))?;
    scan_l1(n, bound, &mut |u| {
        let d = |p: &[i64]| p.iter().zip(u).map(|(a, b)| a * b).sum::<i64>();
        if rays.iter().any(|p| d(p) < 0) {
            return;
        }
        let pattern: Vec<i64> = tau.iter().map(|p| d(p)).collect();
        for &r in &nontrivial {
            if pattern[r] < 1 {
                continue;
            }
            let balanced = (0..n).all(|i| {
                (0..k)
                    .map(|j| (pattern[j] - i64::from(j == r)) * chars[j][i])
                    .sum::<i64>()
                    == 0
            });
            if balanced {
                index[r].push(u.to_vec());
            }
        }
    });

    // keep minimal elements under u <= u' iff u' - u ∈ S_σ
    let below = |u: &[i64], w: &[i64]| {
        let diff: Vec<i64> = w.iter().zip(u).map(|(a, b)| a - b).collect();
        rays.iter()
            .all(|p| p.iter().zip(&diff).map(|(a, b)| a * b).sum::<i64>() >= 0)
    };
    let mut equalities = Vec::new();
    for (r, list) in index.iter().enumerate() {
        let mut minimal: Vec<&Vec<i64>> = list
            .iter()
            .filter(|w| !list.iter().any(|u| u != *w && below(u, w)))
            .collect();
        minimal.sort_by(|a, b| {
            let l1 = |v: &Vec<i64>| v.iter().map(|c| c.abs()).sum::<i64>();
            l1(a).cmp(&l1(b)).then_with(|| b.cmp(a))
        });
        for u in minimal {
            let u = LatticeVector::from_i64(u);
            let pair = &m.roots().pairs[r];
            equalities.push(CenterEquality {
                r,
                lhs: &u + &pair.e1,
                rhs: &u + &pair.e2,
                u,
            });
        }
    }
    Ok(CenterLocus {
        vanishing,
        equalities,
        index_bound: degree_bound,
    })
}

/// `y x y^{-1}`.
pub fn conjugate(m: &RootMonoid, y: &Point, x: &Point) -> Result<Point> {
    m.multiply(&m.multiply(y, x)?, &m.inverse(y)?)
}

/// Deterministic stream of unit-group elements used as commutation probes:
/// one-hot unipotents at a few scales first, then random mixed elements.
pub fn probe_elements(m: &RootMonoid, samples: usize, seed: u64) -> Vec<GroupElement> {
    let mut out = Vec::new();
    let id = m.group_identity();
    for scale in [rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 3)] {
        for r in 0..m.k() {
            let mut g = id.clone();
            g.alpha[r] = scale.clone();
            out.push(g);
        }
    }
    let mut rng = rng(seed);
    for _ in 0..samples {
        out.push(random_group_element(m, &mut rng));
    }
    out
}

/// A unit `y` with `y x y^{-1} != x`, searched over [`probe_elements`].
pub fn central_witness(m: &RootMonoid, x: &Point, samples: usize, seed: u64) -> Result<Option<Point>> {
    for g in probe_elements(m, samples, seed) {
        let y = m.to_point(&g)?;
        if &conjugate(m, &y, x)? != x {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

pub fn is_central(m: &RootMonoid, x: &Point, samples: usize, seed: u64) -> Result<bool> {
    Ok(central_witness(m, x, samples, seed)?.is_none())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub soundness_checked: usize,
    pub soundness_failed: usize,
    pub completeness_checked: usize,
    pub completeness_failed: usize,
    /// Faces whose orbit meets the computed locus.
    pub locus_faces: Vec<Vec<usize>>,
    pub counterexamples: Vec<String>,
}

impl CenterReport {
    pub fn ok(&self) -> bool {
        self.soundness_failed == 0 && self.completeness_failed == 0
    }
}

fn show(m: &RootMonoid, x: &Point) -> String {
    let vals: Vec<String> = m.variety().generator_values(x).iter().map(format_rat).collect();
    format!("generator values [{}]", vals.join(", "))
}

/// Random point of `O_γ ∩ locus`, or `None` when the orbit misses the locus.
fn locus_point_on_face(
    m: &RootMonoid,
    locus: &CenterLocus,
    face: usize,
    rng: &mut SampleRng,
) -> Result<Option<Point>> {
    let v = m.variety();
    let f = v.face(face);
    let cone = v.cone();
    if locus.vanishing.iter().any(|u| cone.is_orthogonal_to_face(f, u)) {
        return Ok(None);
    }
    let chart = v.chart(face);
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for eq in &locus.equalities {
        let a = cone.is_orthogonal_to_face(f, &eq.lhs);
        let b = cone.is_orthogonal_to_face(f, &eq.rhs);
        match (a, b) {
            (false, false) => {}
            (true, true) => rows.push(chart.basis.coords(&(&eq.lhs - &eq.rhs))?),
            _ => return Ok(None),
        }
    }
    Ok(Some(Point {
        face,
        values: character_trivial_on(&rows, chart.basis.len(), rng),
    }))
}

/// Soundness: locus points commute with every probe. Completeness: sampled
/// points off the locus have a non-commuting probe.
pub fn center_cross_validate(
    m: &RootMonoid,
    locus: &CenterLocus,
    samples: usize,
    seed: u64,
) -> Result<CenterReport> {
    let v = m.variety();
    let mut rng = rng(seed);
    let mut report = CenterReport::default();
    let probes = samples.min(12);
    let faces: Vec<usize> = (0..v.faces().len()).collect();
    let mut feasible = Vec::new();
    for &f in &faces {
        if locus_point_on_face(m, locus, f, &mut rng)?.is_some() {
            feasible.push(f);
            report.locus_faces.push(v.face(f).rays.clone());
        }
    }
    for i in 0..samples {
        if feasible.is_empty() {
            break;
        }
        let f = feasible[i % feasible.len()];
        let x = locus_point_on_face(m, locus, f, &mut rng)?.expect("feasible face");
        report.soundness_checked += 1;
        let ok = locus.contains(m, &x)? && is_central(m, &x, probes, seed ^ i as u64)?;
        if !ok {
            report.soundness_failed += 1;
            report.counterexamples.push(format!("locus point not central: {}", show(m, &x)));
        }
    }
    for i in 0..samples {
        let x = random_point(v, &mut rng);
        let inside = locus.contains(m, &x)?;
        report.completeness_checked += 1;
        let witness = central_witness(m, &x, probes, seed ^ (i as u64).rotate_left(17))?;
        if inside != witness.is_none() {
            report.completeness_failed += 1;
            report.counterexamples.push(format!(
                "membership {inside} but witness found: {} for {}",
                witness.is_some(),
                show(m, &x)
            ));
        }
    }
    Ok(report)
}

/// Dimension of the span of the equality characters `lhs - rhs`.
pub fn equality_rank(locus: &CenterLocus, n: usize) -> usize {
    let diffs: Vec<LatticeVector> = locus.equalities.iter().map(|e| &e.lhs - &e.rhs).collect();
    vector_rank(&diffs, n)
}
