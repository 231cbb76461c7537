//! Idempotents of a root monoid, orbit by orbit, and the structure of their
//! closures under ray subtori and root subgroups.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::actions::{ray_subtorus_action, root_subgroup_action};
use crate::arith::{format_rat, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice_core::{
    perp_generators, smith::solve_integer, smith::IntMatrix, Face, LatticeVector,
};
use crate::monoid::{Point, RootMonoid};
use crate::sampling::{character_trivial_on, nonzero_rat, point_on_face, rng, SampleRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Singleton,
    Empty,
    Positive,
}

/// Why an orbit carries no idempotent: for pair `r` (ray outside `γ`),
/// neither or both roots are orthogonal to `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EmptyCertificate {
    NeitherOrthogonal { r: usize, ray: usize },
    BothOrthogonal { r: usize, ray: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentLocus {
    pub gamma: Face,
    pub gamma_id: usize,
    pub case_tag: CaseTag,
    /// `χ^u = 1` for these `u`; empty for the empty case.
    pub equations: Vec<LatticeVector>,
    /// Face `cone(τ, γ)` whose orthogonal semigroup gives the equations.
    pub span_face: Option<Face>,
    pub witness: Option<Point>,
    pub certificate: Option<EmptyCertificate>,
}

impl IdempotentLocus {
    pub fn is_empty(&self) -> bool {
        self.case_tag == CaseTag::Empty
    }

    pub fn contains(&self, m: &RootMonoid, x: &Point) -> Result<bool> {
        if self.is_empty() || x.face != self.gamma_id {
            return Ok(false);
        }
        for u in &self.equations {
            if m.evaluate(x, u)? != Rat::one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn face_id(m: &RootMonoid, gamma: &Face) -> Result<usize> {
    let id = m.variety().face_id(&gamma.rays)?;
    m.cone().check_face(gamma)?;
    Ok(id)
}

/// Face spanned by `γ` and extra rays; it must be a face.
fn span_face(m: &RootMonoid, gamma: &Face, extra: &[usize]) -> Result<Face> {
    let mut rays = gamma.rays.clone();
    rays.extend_from_slice(extra);
    rays.sort_unstable();
    rays.dedup();
    m.cone().face(&rays).map_err(|_| {
        Error::Inconsistent(format!("cone over rays {rays:?} is expected to be a face"))
    })
}

pub fn classify(m: &RootMonoid, gamma: &Face) -> Result<IdempotentLocus> {
    let gid = face_id(m, gamma)?;
    let cone = m.cone();
    let tau = m.tau();
    let generators = m.variety().semigroup();
    if tau.is_subface_of(gamma) {
        return Ok(IdempotentLocus {
            gamma: gamma.clone(),
            gamma_id: gid,
            case_tag: CaseTag::Singleton,
            equations: perp_generators(cone, generators, gamma),
            span_face: Some(gamma.clone()),
            witness: Some(m.variety().distinguished_point(gid)),
            certificate: None,
        });
    }
    for (r, &ray) in m.roots().tau_rays.iter().enumerate() {
        if gamma.contains_ray(ray) {
            continue;
        }
        let pair = &m.roots().pairs[r];
        let in1 = cone.is_orthogonal_to_face(gamma, &pair.e1);
        let in2 = cone.is_orthogonal_to_face(gamma, &pair.e2);
        let cert = match (in1, in2) {
            (false, false) => Some(EmptyCertificate::NeitherOrthogonal { r, ray }),
            (true, true) => Some(EmptyCertificate::BothOrthogonal { r, ray }),
            _ => None,
        };
        if let Some(c) = cert {
            return Ok(IdempotentLocus {
                gamma: gamma.clone(),
                gamma_id: gid,
                case_tag: CaseTag::Empty,
                equations: Vec::new(),
                span_face: None,
                witness: None,
                certificate: Some(c),
            });
        }
    }
    let span = span_face(m, gamma, &tau.rays)?;
    Ok(IdempotentLocus {
        gamma: gamma.clone(),
        gamma_id: gid,
        case_tag: CaseTag::Positive,
        equations: perp_generators(cone, generators, &span),
        span_face: Some(span),
        witness: Some(m.variety().distinguished_point(gid)),
        certificate: None,
    })
}

pub fn classify_all(m: &RootMonoid) -> Result<Vec<IdempotentLocus>> {
    m.variety().faces().iter().map(|f| classify(m, f)).collect()
}

/// Uniform-ish random point of a nonempty locus, parametrized through the
/// quotient of the orbit lattice by the span of the equations.
pub fn sample_locus_point(m: &RootMonoid, locus: &IdempotentLocus, rng: &mut SampleRng) -> Result<Point> {
    if locus.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let chart = m.variety().chart(locus.gamma_id);
    let rows = locus
        .equations
        .iter()
        .map(|u| chart.basis.coords(u))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point {
        face: locus.gamma_id,
        values: character_trivial_on(&rows, chart.basis.len(), rng),
    })
}

/// Faces `cone(γ, p_{i_1}, ..., p_{i_l})` over subsets of the rays of `τ` outside `γ`.
pub fn closure_faces(m: &RootMonoid, gamma: &Face) -> Result<Vec<Face>> {
    let locus = classify(m, gamma)?;
    if locus.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let outside: Vec<usize> = m
        .tau()
        .rays
        .iter()
        .copied()
        .filter(|&i| !gamma.contains_ray(i))
        .collect();
    let mut out: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut faces = Vec::new();
    for mask in 0u64..(1u64 << outside.len()) {
        let extra: Vec<usize> = (0..outside.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| outside[b])
            .collect();
        let f = span_face(m, gamma, &extra)?;
        if out.insert((f.dim, f.rays.clone())) {
            faces.push(f);
        }
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.rays.cmp(&b.rays)));
    Ok(faces)
}

/// For each ray of `τ` outside `γ`, the root of its pair that is orthogonal
/// to `γ`. Flowing `x_{cone(τ,γ)}` along these roots sweeps out the closure
/// of `E_γ`; the partner root fixes that point.
pub fn h_gamma_roots(m: &RootMonoid, gamma: &Face) -> Result<Vec<LatticeVector>> {
    let locus = classify(m, gamma)?;
    match locus.case_tag {
        CaseTag::Singleton => return Ok(Vec::new()),
        CaseTag::Empty => {
            return Err(Error::PatternViolated(format!(
                "face {:?} has an empty idempotent locus",
                gamma.rays
            )))
        }
        CaseTag::Positive => {}
    }
    let cone = m.cone();
    let mut out = Vec::new();
    for (r, &ray) in m.roots().tau_rays.iter().enumerate() {
        if gamma.contains_ray(ray) {
            continue;
        }
        let pair = &m.roots().pairs[r];
        out.push(if cone.is_orthogonal_to_face(gamma, &pair.e1) {
            pair.e1.clone()
        } else {
            pair.e2.clone()
        });
    }
    Ok(out)
}

/// The partner roots (not orthogonal to `γ`), for negative controls.
pub fn h_gamma_partner_roots(m: &RootMonoid, gamma: &Face) -> Result<Vec<LatticeVector>> {
    let chosen = h_gamma_roots(m, gamma)?;
    let mut out = Vec::new();
    let mut idx = 0;
    for (r, &ray) in m.roots().tau_rays.iter().enumerate() {
        if gamma.contains_ray(ray) {
            continue;
        }
        let pair = &m.roots().pairs[r];
        out.push(if chosen[idx] == pair.e1 {
            pair.e2.clone()
        } else {
            pair.e1.clone()
        });
        idx += 1;
    }
    Ok(out)
}

/// Exact `t` with `R_τ(t) x = y` for `x, y` in the same orbit, if the
/// orbit-lattice equations admit one; `None` otherwise.
pub fn connecting_torus_element(m: &RootMonoid, x: &Point, y: &Point) -> Result<Option<Vec<(usize, Rat)>>> {
    if x.face != y.face {
        return Ok(None);
    }
    let v = m.variety();
    let gamma = v.face(x.face);
    let n = v.rank();
    let outside: Vec<usize> = m
        .tau()
        .rays
        .iter()
        .copied()
        .filter(|&i| !gamma.contains_ray(i))
        .collect();
    let mut rows: Vec<LatticeVector> = v.cone().face_rays(gamma);
    rows.extend(outside.iter().map(|&i| v.cone().rays()[i].clone()));
    let a = IntMatrix::from_rows(&rows, n);
    let mut t = Vec::with_capacity(outside.len());
    let mut current = x.clone();
    for (s, &ray) in outside.iter().enumerate() {
        let mut rhs = vec![Int::zero(); rows.len()];
        rhs[gamma.rays.len() + s] = Int::one();
        let Some(u) = solve_integer(&a, &rhs) else {
            return Ok(None);
        };
        let u = LatticeVector::new(u);
        let ratio = v.evaluate_local(y, &u)? / v.evaluate_local(x, &u)?;
        current = ray_subtorus_action(v, &v.cone().rays()[ray], &ratio, &current)?;
        t.push((ray, ratio));
    }
    Ok((&current == y).then_some(t))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub face: Vec<usize>,
    pub passed: usize,
    pub failed: usize,
    /// Faces reached by root-subgroup flows from `x_{cone(τ,γ)}`.
    pub reached: Vec<Vec<usize>>,
    pub expected: Vec<Vec<usize>>,
    pub counterexamples: Vec<String>,
}

impl OrbitReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < 20 {
                self.counterexamples.push(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn show(m: &RootMonoid, x: &Point) -> String {
    let vals: Vec<String> = x.values.iter().map(format_rat).collect();
    format!("point on face {:?} values [{}]", m.variety().face(x.face).rays, vals.join(", "))
}

pub fn verify_orbit_structure(m: &RootMonoid, gamma: &Face, samples: usize, seed: u64) -> Result<OrbitReport> {
    let roots = h_gamma_roots(m, gamma)?;
    verify_orbit_structure_with_roots(m, gamma, &roots, samples, seed)
}

/// Same as [`verify_orbit_structure`] with caller-chosen flow roots.
pub fn verify_orbit_structure_with_roots(
    m: &RootMonoid,
    gamma: &Face,
    roots: &[LatticeVector],
    samples: usize,
    seed: u64,
) -> Result<OrbitReport> {
    let locus = classify(m, gamma)?;
    if locus.is_empty() {
        return Err(Error::EmptyLocus);
    }
    let v = m.variety();
    let mut rng = rng(seed);
    let expected = closure_faces(m, gamma)?;
    let mut report = OrbitReport {
        face: gamma.rays.clone(),
        expected: expected.iter().map(|f| f.rays.clone()).collect(),
        ..Default::default()
    };
    let x_gamma = v.distinguished_point(locus.gamma_id);
    let tau_rays: Vec<usize> = m.tau().rays.clone();

    // (a) ray-subtorus translates of x_γ lie on the locus and are idempotent
    let mut translates = Vec::new();
    for _ in 0..samples {
        let mut y = x_gamma.clone();
        for &i in &tau_rays {
            y = ray_subtorus_action(v, &v.cone().rays()[i], &nonzero_rat(&mut rng), &y)?;
        }
        let on = locus.contains(m, &y)?;
        let idem = m.is_idempotent(&y)?;
        report.check(on && idem, || format!("torus translate not idempotent: {}", show(m, &y)));
        translates.push(y);
    }

    // single orbit: independently sampled locus points are connected by R_τ
    for _ in 0..samples.min(50) {
        let a = sample_locus_point(m, &locus, &mut rng)?;
        let b = sample_locus_point(m, &locus, &mut rng)?;
        let idem = m.is_idempotent(&a)?;
        report.check(idem, || format!("locus point not idempotent: {}", show(m, &a)));
        let t = connecting_torus_element(m, &a, &b)?;
        report.check(t.is_some(), || {
            format!("no ray-subtorus element connects {} and {}", show(m, &a), show(m, &b))
        });
    }

    // (b) flows from x_{cone(τ,γ)} along the chosen roots
    let start_face = span_face(m, gamma, &tau_rays)?;
    let start = v.distinguished_point(v.face_id(&start_face.rays)?);
    let expected_set: BTreeSet<Vec<usize>> = report.expected.iter().cloned().collect();
    let mut reached: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut flow = |word: &[(usize, Rat)], report: &mut OrbitReport| -> Result<()> {
        let mut y = start.clone();
        for (r, a) in word {
            y = root_subgroup_action(v, &roots[*r], a, &y)?;
        }
        let rays = v.face(y.face).rays.clone();
        let idem = m.is_idempotent(&y)?;
        let listed = expected_set.contains(&rays);
        report.check(idem && listed, || {
            format!("flow word {word:?} reached {} (idempotent: {idem}, listed: {listed})", show(m, &y))
        });
        reached.insert(rays);
        Ok(())
    };
    for mask in 0u64..(1u64 << roots.len()) {
        let word: Vec<(usize, Rat)> = (0..roots.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| (b, nonzero_rat(&mut rng)))
            .collect();
        flow(&word, &mut report)?;
    }
    if !roots.is_empty() {
        for _ in 0..samples {
            let len = rng.gen_range(1..=2 * roots.len());
            let word: Vec<(usize, Rat)> = (0..len)
                .map(|_| (rng.gen_range(0..roots.len()), nonzero_rat(&mut rng)))
                .collect();
            flow(&word, &mut report)?;
        }
    }
    report.reached = reached.iter().cloned().collect();
    let same = reached == expected_set;
    let msg = format!(
        "reached faces {:?} differ from closure faces {:?}",
        report.reached, report.expected
    );
    report.check(same, || msg);

    // (c) orbit points off the locus are not idempotent
    for _ in 0..samples {
        let y = point_on_face(v, locus.gamma_id, &mut rng);
        if locus.contains(m, &y)? {
            continue;
        }
        let idem = m.is_idempotent(&y)?;
        report.check(!idem, || format!("off-locus point is idempotent: {}", show(m, &y)));
    }
    Ok(report)
}
