//! Demazure roots of a cone and compatible root pairs for a regular face.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Int, JsonInt, Rat};
use crate::error::{Error, Result};
use crate::lattice_core::{
    dot, is_regular_face, relative_interior_point, smith::solve_integer,
    smith::IntMatrix, Cone, Face, LatticeVector,
};

/// Max-norm box used by root enumeration when the caller gives none.
pub const DEFAULT_ROOT_BOUND: u64 = 5;

/// Upper limit on lattice points scanned while minimizing `u_r`.
const SOLUTION_SCAN_LIMIT: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DemazureRoot {
    pub vector: LatticeVector,
    pub ray_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPair {
    pub e1: LatticeVector,
    pub e2: LatticeVector,
}

/// Root pairs indexed by the rays of a face: pair `r` belongs to ray `tau_rays[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemazureRootPairSet {
    pub tau_rays: Vec<usize>,
    pub pairs: Vec<RootPair>,
}

impl DemazureRootPairSet {
    /// `e2 - e1` for every pair.
    pub fn differences(&self) -> Vec<LatticeVector> {
        self.pairs.iter().map(|p| &p.e2 - &p.e1).collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    E1,
    E2,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::E1 => "e1",
            Which::E2 => "e2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The face rays and the pair list do not line up.
    LengthMismatch { face_rays: Vec<usize>, tau_rays: Vec<usize>, pairs: usize },
    /// Wrong rank for a root vector.
    Rank { r: usize, which: Which },
    /// `<p_s, e_r> != -delta_rs`.
    Kronecker { r: usize, s: usize, which: Which, pairing: JsonInt },
    /// Negative pairing with a ray outside the face.
    NotARoot { r: usize, which: Which, ray: usize, pairing: JsonInt },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for CompatibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.compatible {
            return f.write_str("compatible");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            match v {
                Violation::LengthMismatch { face_rays, tau_rays, pairs } => write!(
                    f,
                    "face rays {face_rays:?} vs tau_rays {tau_rays:?} with {pairs} pairs"
                )?,
                Violation::Rank { r, which } => write!(f, "pair {r}: {which} has the wrong rank")?,
                Violation::Kronecker { r, s, which, pairing } => {
                    write!(f, "pair {r}: <p_{s}, {which}> = {pairing}")?
                }
                Violation::NotARoot { r, which, ray, pairing } => {
                    write!(f, "pair {r}: {which} pairs to {pairing} with ray {ray}")?
                }
            }
        }
        Ok(())
    }
}

/// The ray index `i` with `<p_i, e> = -1` when `e` is a Demazure root.
pub fn is_demazure_root(sigma: &Cone, e: &LatticeVector) -> Option<usize> {
    if e.rank() != sigma.rank() {
        return None;
    }
    let mut found = None;
    for (i, p) in sigma.rays().iter().enumerate() {
        let v = dot(p, e);
        if v == -Int::one() {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        } else if v.is_negative() {
            return None;
        }
    }
    found
}

/// All roots for ray `ray_index` with max-norm at most `bound`, lexicographically ascending.
pub fn enumerate_roots(sigma: &Cone, ray_index: usize, bound: u64) -> Result<Vec<DemazureRoot>> {
    if ray_index >= sigma.rays().len() {
        return Err(Error::NotAFace(vec![ray_index]));
    }
    let n = sigma.rank();
    let b = bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![-b; n];
    loop {
        let e = LatticeVector::from_i64(&cur);
        if is_demazure_root(sigma, &e) == Some(ray_index) {
            out.push(DemazureRoot {
                vector: e,
                ray_index,
            });
        }
        // odometer, last coordinate fastest gives lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < b {
                cur[i] += 1;
                break;
            }
            cur[i] = -b;
        }
    }
}

pub fn is_compatible_set(
    sigma: &Cone,
    tau: &Face,
    pairs: &DemazureRootPairSet,
) -> CompatibilityReport {
    let mut violations = Vec::new();
    let mut sorted = pairs.tau_rays.clone();
    sorted.sort_unstable();
    if sorted != tau.rays || pairs.pairs.len() != pairs.tau_rays.len() {
        violations.push(Violation::LengthMismatch {
            face_rays: tau.rays.clone(),
            tau_rays: pairs.tau_rays.clone(),
            pairs: pairs.pairs.len(),
        });
        return CompatibilityReport {
            compatible: false,
            violations,
        };
    }
    for (r, pair) in pairs.pairs.iter().enumerate() {
        for (which, e) in [(Which::E1, &pair.e1), (Which::E2, &pair.e2)] {
            if e.rank() != sigma.rank() {
                violations.push(Violation::Rank { r, which });
                continue;
            }
            for (s, &ray) in pairs.tau_rays.iter().enumerate() {
                let v = dot(&sigma.rays()[ray], e);
                let want = if r == s { -Int::one() } else { Int::zero() };
                if v != want {
                    violations.push(Violation::Kronecker {
                        r,
                        s,
                        which,
                        pairing: JsonInt(v),
                    });
                }
            }
            for (i, p) in sigma.rays().iter().enumerate() {
                if tau.contains_ray(i) {
                    continue;
                }
                let v = dot(p, e);
                if v.is_negative() {
                    violations.push(Violation::NotARoot {
                        r,
                        which,
                        ray: i,
                        pairing: JsonInt(v),
                    });
                }
            }
        }
    }
    CompatibilityReport {
        compatible: violations.is_empty(),
        violations,
    }
}

/// Minimal max-norm integer solution of `<rows_s, u> = rhs_s`, ties broken
/// lexicographically; `None` when unsolvable.
fn minimal_solution(rows: &[LatticeVector], rhs: &[Int], n: usize) -> Option<LatticeVector> {
    let a = IntMatrix::from_rows(rows, n);
    let particular = LatticeVector::new(solve_integer(&a, rhs)?);
    let start = particular.max_norm().to_u64().unwrap_or(u64::MAX);
    for b in 0..=start {
        if (2 * b + 1).checked_pow(n as u32).is_none_or(|c| c > SOLUTION_SCAN_LIMIT) {
            break;
        }
        let bi = b as i64;
        let mut cur = vec![-bi; n];
        loop {
            let u = LatticeVector::from_i64(&cur);
            if rows.iter().zip(rhs).all(|(p, h)| &dot(p, &u) == h) {
                return Some(u);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if cur[i] < bi {
                    cur[i] += 1;
                    break;
                }
                cur[i] = -bi;
            }
            if cur.iter().all(|&c| c == -bi) {
                break;
            }
        }
    }
    Some(particular)
}

/// Builds compatible pairs with `e1^(r) - e2^(r) = c_r`, pair `r` attached to
/// the `r`-th ray of `tau` in ascending index order.
pub fn compatible_pairs_with_differences(
    sigma: &Cone,
    tau: &Face,
    c: &[LatticeVector],
) -> Result<DemazureRootPairSet> {
    let n = sigma.rank();
    if !is_regular_face(sigma, tau)? {
        return Err(Error::NonRegularFace(tau.rays.clone()));
    }
    let k = tau.rays.len();
    if c.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: c.len(),
        });
    }
    let tau_vecs = sigma.face_rays(tau);
    for cr in c {
        cr.check_rank(n)?;
        if !sigma.is_orthogonal_to_face(tau, cr) {
            return Err(Error::InvalidDifference(format!(
                "{cr} is not orthogonal to the face rays {:?}",
                tau.rays
            )));
        }
    }
    let dual = sigma.dual();
    let v = relative_interior_point(&dual, &sigma.dual_face(tau, &dual));

    let mut pairs = Vec::with_capacity(k);
    for (r, c_r) in c.iter().enumerate() {
        let rhs: Vec<Int> = (0..k)
            .map(|s| if s == r { -Int::one() } else { Int::zero() })
            .collect();
        let u = minimal_solution(&tau_vecs, &rhs, n)
            .ok_or_else(|| Error::NonRegularFace(tau.rays.clone()))?;
        // smallest N >= 0 with u + N v a root
        let mut big_n = Int::zero();
        for (i, q) in sigma.rays().iter().enumerate() {
            if tau.contains_ray(i) {
                continue;
            }
            let need = -dot(q, &u);
            let step = dot(q, &v);
            if need.is_positive() {
                let t = need.div_ceil(&step);
                if t > big_n {
                    big_n = t;
                }
            }
        }
        let base = &u + &v.scale(&big_n);
        debug_assert_eq!(is_demazure_root(sigma, &base), Some(tau.rays[r]));

        let e1 = smallest_shift(sigma, tau, &base, c_r)?;
        let e2 = &e1 - c_r;
        pairs.push(RootPair { e1, e2 });
    }
    Ok(DemazureRootPairSet {
        tau_rays: tau.rays.clone(),
        pairs,
    })
}

/// First `base + w` (w in `tau* ∩ M`, by l1-norm then lexicographic) such
/// that `base + w - c` is also a root. Points of `tau^perp` are walked through
/// their free coordinates in shells of growing l1-norm; the free part bounds
/// the full norm from below, which ends the walk.
fn smallest_shift(
    sigma: &Cone,
    tau: &Face,
    base: &LatticeVector,
    c: &LatticeVector,
) -> Result<LatticeVector> {
    let n = sigma.rank();
    let small = |v: &LatticeVector| {
        v.iter()
            .map(|x| x.to_i128().ok_or_else(|| Error::Overflow(format!("shift search at {v}"))))
            .collect::<Result<Vec<i128>>>()
    };
    let d = |a: &[i128], b: &[i128]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i128>();
    let base_s = small(base)?;
    let c_s = small(c)?;
    let mut others = Vec::new();
    let mut lower = Vec::new();
    for (i, q) in sigma.rays().iter().enumerate() {
        if tau.contains_ray(i) {
            continue;
        }
        let q = small(q)?;
        let at_base = d(&q, &base_s);
        lower.push(0.max(-at_base).max(d(&q, &c_s) - at_base));
        others.push(q);
    }

    // reduced row echelon form of the face rays over Q
    let mut rows: Vec<Vec<Rat>> = sigma
        .face_rays(tau)
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pr);
        let lead = rows[row][col].clone();
        for x in rows[row].iter_mut() {
            *x /= &lead;
        }
        let pivot = rows[row].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    // w_pivot = (Σ_f num[f] w_f) / den
    let den = rows
        .iter()
        .flatten()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let mut num = Vec::with_capacity(pivots.len());
    for r in rows.iter().take(pivots.len()) {
        let coeffs = free
            .iter()
            .map(|&f| {
                let v = -(&r[f] * Rat::from_integer(den.clone())).to_integer();
                v.to_i128().ok_or_else(|| Error::Overflow("shift search".into()))
            })
            .collect::<Result<Vec<i128>>>()?;
        num.push(coeffs);
    }
    let den = den.to_i128().ok_or_else(|| Error::Overflow("shift search".into()))?;

    let mut best: Option<(i128, Vec<i128>)> = None;
    let mut level: i128 = 0;
    loop {
        if let Some((bl, _)) = &best {
            if level > *bl {
                break;
            }
        }
        let mut visit = |wf: &[i128]| {
            let mut w = vec![0i128; n];
            for (&j, &x) in free.iter().zip(wf) {
                w[j] = x;
            }
            for (&p, coeffs) in pivots.iter().zip(&num) {
                let t = d(coeffs, wf);
                if t % den != 0 {
                    return;
                }
                w[p] = t / den;
            }
            if others.iter().zip(&lower).any(|(q, lo)| d(q, &w) < *lo) {
                return;
            }
            let l1 = w.iter().map(|x| x.abs()).sum::<i128>();
            if best.as_ref().is_none_or(|(bl, bw)| (l1, &w) < (*bl, bw)) {
                best = Some((l1, w));
            }
        };
        shell(free.len(), level, &mut Vec::new(), &mut visit);
        level += 1;
    }
    let (_, w) = best.expect("the loop only ends with a candidate");
    Ok(base + &LatticeVector::new(w.into_iter().map(Int::from).collect()))
}

/// Calls `visit` on every integer vector of length `d` with l1-norm exactly `f`.
fn shell(d: usize, f: i128, cur: &mut Vec<i128>, visit: &mut dyn FnMut(&[i128])) {
    if cur.len() == d {
        if f == 0 {
            visit(cur);
        }
        return;
    }
    if cur.len() + 1 == d {
        for x in if f == 0 { vec![0] } else { vec![-f, f] } {
            cur.push(x);
            visit(cur);
            cur.pop();
        }
        return;
    }
    for x in -f..=f {
        cur.push(x);
        shell(d, f - x.abs(), cur, visit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cylinder() -> Cone {
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
        .unwrap()
    }

    #[test]
    fn root_membership() {
        let s = cylinder();
        assert_eq!(is_demazure_root(&s, &LatticeVector::from_i64(&[-1, 0, 1, 1])), Some(0));
        assert_eq!(is_demazure_root(&s, &LatticeVector::zero(4)), None);
        assert_eq!(is_demazure_root(&s, &LatticeVector::from_i64(&[-1, 0, 0, 0])), None);
    }

    #[test]
    fn rank_one_roots() {
        let s = Cone::orthant(1);
        let roots = enumerate_roots(&s, 0, 3).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].vector, LatticeVector::from_i64(&[-1]));
    }

    #[test]
    fn swapped_root_is_flagged() {
        let s = cylinder();
        let tau = s.face(&[0, 1]).unwrap();
        let good = DemazureRootPairSet {
            tau_rays: vec![0, 1],
            pairs: vec![
                RootPair {
                    e1: LatticeVector::from_i64(&[-1, 0, 0, 1]),
                    e2: LatticeVector::from_i64(&[-1, 0, 0, 1]),
                },
                RootPair {
                    e1: LatticeVector::from_i64(&[0, -1, 0, 1]),
                    e2: LatticeVector::from_i64(&[0, -1, 0, 1]),
                },
            ],
        };
        assert!(is_compatible_set(&s, &tau, &good).compatible);
        let mut bad = good.clone();
        bad.pairs[0].e1 = LatticeVector::from_i64(&[0, -1, 0, 1]);
        let rep = is_compatible_set(&s, &tau, &bad);
        assert!(!rep.compatible);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Kronecker { r: 0, s: 1, .. })));
    }

    #[test]
    fn constructor_zero_differences() {
        let s = cylinder();
        let tau = s.face(&[0, 1]).unwrap();
        let c = vec![LatticeVector::zero(4), LatticeVector::zero(4)];
        let set = compatible_pairs_with_differences(&s, &tau, &c).unwrap();
        assert!(is_compatible_set(&s, &tau, &set).compatible);
        for p in &set.pairs {
            assert_eq!(p.e1, p.e2);
        }
    }
}
