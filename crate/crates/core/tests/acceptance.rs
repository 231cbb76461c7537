//! Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::oracles::check_cone;
use common::*;
use rootmonoid::actions::{degenerate_parameter, he_connected_pairs, root_subgroup_action};
use rootmonoid::center::{center_cross_validate, center_equations, default_center_bound};
use rootmonoid::idempotents::{classify_all, sample_locus_point, verify_orbit_structure, CaseTag};
use rootmonoid::lattice_core::{Cone, LatticeVector};
use rootmonoid::monoid::RootMonoid;
use rootmonoid::presets::{affine_space_monoid, quadric_cylinder_cone, quadric_cylinder_monoid, CylinderParams};
use rootmonoid::sampling::{
    nonzero_rat, point_on_face, random_cone, random_invertible_point, random_monoid, random_point, rng,
};

fn presets() -> Vec<RootMonoid> {
    let mut out: Vec<RootMonoid> = cylinder_instances()
        .into_iter()
        .map(|p| quadric_cylinder_monoid(p).unwrap())
        .collect();
    for (a, b) in affine_instances() {
        out.push(affine_space_monoid(4, 2, &a, &b).unwrap());
    }
    out
}

fn affine_closed_forms() {
    for (i, (a, b)) in affine_instances().into_iter().enumerate() {
        let m = affine_space_monoid(4, 2, &a, &b).unwrap();
        assert_eq!(m.is_active(), i == 1, "activeness of instance {i}");
        let mut r = rng(100 + i as u64);
        for _ in 0..25 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let z = m.multiply(&x, &y).unwrap();
            assert_eq!(coords(&m, &z), affine_closed_form(2, &a, &b, &coords(&m, &x), &coords(&m, &y)));
        }
    }
}

fn cylinder_closed_form_check() {
    let ps = cylinder_instances();
    assert!(ps.iter().any(|p| (p.a1, p.b1) == (p.a2, p.b2)));
    for p in ps {
        let m = quadric_cylinder_monoid(p).unwrap();
        let mut r = rng(200);
        for _ in 0..25 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let (cx, cy) = (coords(&m, &x), coords(&m, &y));
            assert_eq!(&cx[0] * &cx[1], &cx[3] * &cx[4], "sample off the quadric");
            let z = m.multiply(&x, &y).unwrap();
            assert_eq!(coords(&m, &z), cylinder_closed_form(p, &cx, &cy), "params {p:?}");
        }
    }
}

fn axioms_on(m: &RootMonoid, triples: usize, inverses: usize, seed: u64) {
    let mut r = rng(seed);
    let e = m.neutral();
    for _ in 0..triples {
        let x = random_point(m.variety(), &mut r);
        let y = random_point(m.variety(), &mut r);
        let z = random_point(m.variety(), &mut r);
        let l = m.multiply(&m.multiply(&x, &y).unwrap(), &z).unwrap();
        assert_eq!(l, m.multiply(&x, &m.multiply(&y, &z).unwrap()).unwrap(), "associativity");
        assert_eq!(m.multiply(&e, &x).unwrap(), x, "left neutral");
        assert_eq!(m.multiply(&x, &e).unwrap(), x, "right neutral");
    }
    for _ in 0..inverses {
        let y = random_invertible_point(m, &mut r).unwrap();
        assert_eq!(m.multiply(&y, &m.inverse(&y).unwrap()).unwrap(), e, "inverse");
    }
}

fn monoid_axioms() {
    for (i, m) in presets().iter().enumerate() {
        axioms_on(m, 100, 50, 300 + i as u64);
    }
    let mut r = rng(31);
    for i in 0..5 {
        let m = random_monoid(5, &mut r);
        assert!(m.variety().rank() <= 5);
        axioms_on(&m, 100, 50, 400 + i);
    }
}

fn x34(a: i64, b: i64) -> LatticeVector {
    LatticeVector::from_i64(&[0, 0, a, b])
}

fn center_system() {
    for p in [cylinder([0, 1, 1, 1, 0, 1, 2, 3]), cylinder([2, 1, 0, 3, 1, 2, 3, 1])] {
        let CylinderParams { a1, b1, a2, b2, c1, d1, c2, d2 } = p;
        let m = quadric_cylinder_monoid(p).unwrap();
        assert!(m.is_active());
        let l = center_equations(&m, default_center_bound(&m)).unwrap();
        let g = m.variety().generators();
        assert_eq!(l.vanishing, vec![g[0].clone(), g[1].clone(), g[4].clone()], "x1 = x2 = x5 = 0");
        let got: Vec<_> = l.equalities.iter().map(|e| (e.lhs.clone(), e.rhs.clone())).collect();
        assert_eq!(got, vec![(x34(a1, b1), x34(a2, b2)), (x34(c1, d1), x34(c2, d2))]);
        let rep = center_cross_validate(&m, &l, 100, 7).unwrap();
        assert!(rep.ok(), "{:?}", rep.counterexamples);
        assert_eq!(rep.soundness_checked, 100);
        assert_eq!(rep.completeness_checked, 100);
    }
}

fn idempotent_classification() {
    for (i, m) in presets().iter().enumerate() {
        let mut r = rng(500 + i as u64);
        for l in classify_all(m).unwrap() {
            if l.case_tag == CaseTag::Empty {
                for _ in 0..100 {
                    let x = point_on_face(m.variety(), l.gamma_id, &mut r);
                    assert!(!m.is_idempotent(&x).unwrap(), "idempotent in an empty orbit {:?}", l.gamma.rays);
                }
                continue;
            }
            for _ in 0..20 {
                let x = sample_locus_point(m, &l, &mut r).unwrap();
                assert!(m.is_idempotent(&x).unwrap(), "locus point not idempotent on {:?}", l.gamma.rays);
            }
            if l.equations.iter().all(|u| u.is_zero()) {
                // the locus is the whole orbit
                for _ in 0..100 {
                    let x = point_on_face(m.variety(), l.gamma_id, &mut r);
                    assert!(m.is_idempotent(&x).unwrap(), "orbit point not idempotent on {:?}", l.gamma.rays);
                }
                continue;
            }
            let mut off = 0;
            while off < 100 {
                let x = point_on_face(m.variety(), l.gamma_id, &mut r);
                if l.contains(m, &x).unwrap() {
                    continue;
                }
                off += 1;
                assert!(!m.is_idempotent(&x).unwrap(), "off-locus idempotent on {:?}", l.gamma.rays);
            }
        }
    }
}

fn closure_structure() {
    let mut positive = 0;
    for m in presets() {
        for l in classify_all(&m).unwrap() {
            if l.case_tag != CaseTag::Positive {
                continue;
            }
            positive += 1;
            let rep = verify_orbit_structure(&m, &l.gamma, 10, 9).unwrap();
            assert!(rep.ok(), "face {:?}: {:?}", l.gamma.rays, rep.counterexamples);
            let (mut a, mut b) = (rep.reached.clone(), rep.expected.clone());
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
    assert!(positive > 0);
}

fn orbit_pair_coherence() {
    let mut r = rng(800);
    for m in presets() {
        let v = m.variety();
        let mut roots: Vec<LatticeVector> = Vec::new();
        for p in &m.roots().pairs {
            for e in [&p.e1, &p.e2] {
                if !roots.contains(e) {
                    roots.push(e.clone());
                }
            }
        }
        for e in roots {
            let mut expected: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for p in he_connected_pairs(v.cone(), &e).unwrap() {
                expected.push((p.gamma1.rays.clone(), p.gamma2.rays.clone()));
                expected.push((p.gamma2.rays, p.gamma1.rays));
            }
            expected.sort();
            let mut seen = Vec::new();
            for f in 0..v.faces().len() {
                for _ in 0..4 {
                    let x = point_on_face(v, f, &mut r);
                    let a = degenerate_parameter(v, &e, &x).unwrap().unwrap_or_else(|| nonzero_rat(&mut r));
                    let y = root_subgroup_action(v, &e, &a, &x).unwrap();
                    if y.face != f {
                        let jump = (v.face(f).rays.clone(), v.face(y.face).rays.clone());
                        if !seen.contains(&jump) {
                            seen.push(jump);
                        }
                    }
                }
            }
            seen.sort();
            assert_eq!(seen, expected, "root {e}");
        }
    }
}

fn lattice_oracles() {
    check_cone(&Cone::orthant(3));
    check_cone(&quadric_cylinder_cone());
    check_cone(&Cone::from_i64(2, &[&[1, 1], &[1, -1]]).unwrap());
    let mut r = rng(900);
    for rank in 1..=4 {
        for _ in 0..3 {
            check_cone(&random_cone(rank, &mut r));
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn()); 8] = [
        ("affine-space closed forms and activeness", 1, affine_closed_forms),
        ("quadric-cylinder closed form", 2, cylinder_closed_form_check),
        ("monoid axioms", 10, monoid_axioms),
        ("center equations and cross-validation", 5, center_system),
        ("idempotent classification oracle", 10, idempotent_classification),
        ("orbit closure structure", 10, closure_structure),
        ("orbit-pair coherence", 5, orbit_pair_coherence),
        ("lattice-core oracles", 10, lattice_oracles),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let took = start.elapsed();
        let pass = outcome.is_ok() && took < Duration::from_secs(limit);
        if !pass {
            failed += 1;
        }
        let why = match (&outcome, pass) {
            (Err(_), _) => "  (check failed)",
            (Ok(_), false) => "  (over time limit)",
            _ => "",
        };
        println!(
            "{}  {name:<42} {:>7.3}s  limit {limit}s{why}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
