mod common;

use common::*;
use rootmonoid::idempotents::{
    classify, classify_all, closure_faces, h_gamma_partner_roots, h_gamma_roots, sample_locus_point,
    verify_orbit_structure, verify_orbit_structure_with_roots, CaseTag,
};
use rootmonoid::lattice_core::LatticeVector;
use rootmonoid::monoid::RootMonoid;
use rootmonoid::presets::{affine_space_monoid, quadric_cylinder_monoid};
use rootmonoid::sampling::{point_on_face, rng};

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

#[test]
fn neutral_orbit_is_singleton() {
    for m in presets() {
        let l = classify(&m, m.tau()).unwrap();
        assert_eq!(l.case_tag, CaseTag::Singleton);
        assert_eq!(l.witness.unwrap(), m.neutral());
    }
}

#[test]
fn cylinder_face_of_third_ray() {
    // a1=0, a2=1, c1=0, c2=2: exactly one root per pair vanishes on p3
    let m = quadric_cylinder_monoid(cylinder([0, 1, 1, 1, 0, 1, 2, 3])).unwrap();
    let g = m.cone().face(&[2]).unwrap();
    let l = classify(&m, &g).unwrap();
    assert_eq!(l.case_tag, CaseTag::Positive);
    assert_eq!(
        h_gamma_roots(&m, &g).unwrap(),
        vec![
            LatticeVector::from_i64(&[-1, 0, 0, 1]),
            LatticeVector::from_i64(&[0, -1, 0, 1]),
        ]
    );
    // a1=a2=0: both roots of the first pair vanish on p3
    let m = quadric_cylinder_monoid(cylinder([0, 1, 0, 2, 0, 1, 2, 1])).unwrap();
    assert_eq!(classify(&m, &g).unwrap().case_tag, CaseTag::Empty);
}

#[test]
fn classification_matches_idempotence() {
    for m in presets() {
        let mut r = rng(11);
        for l in classify_all(&m).unwrap() {
            if l.is_empty() {
                for _ in 0..40 {
                    let x = point_on_face(m.variety(), l.gamma_id, &mut r);
                    assert!(!m.is_idempotent(&x).unwrap());
                }
                continue;
            }
            for _ in 0..20 {
                let x = sample_locus_point(&m, &l, &mut r).unwrap();
                assert!(m.is_idempotent(&x).unwrap(), "face {:?}", l.gamma.rays);
                let y = point_on_face(m.variety(), l.gamma_id, &mut r);
                if !l.contains(&m, &y).unwrap() {
                    assert!(!m.is_idempotent(&y).unwrap());
                }
            }
        }
    }
}

#[test]
fn closures_and_orbits() {
    for m in presets() {
        for l in classify_all(&m).unwrap() {
            if l.is_empty() {
                assert!(closure_faces(&m, &l.gamma).is_err());
                continue;
            }
            for f in closure_faces(&m, &l.gamma).unwrap() {
                assert!(!classify(&m, &f).unwrap().is_empty());
            }
            let rep = verify_orbit_structure(&m, &l.gamma, 20, 5).unwrap();
            assert!(rep.ok(), "face {:?}: {:?}", l.gamma.rays, rep.counterexamples);
        }
    }
}

#[test]
fn partner_roots_fail_the_closure_check() {
    let m = quadric_cylinder_monoid(cylinder([0, 1, 1, 1, 0, 1, 2, 3])).unwrap();
    let mut positive = 0;
    for l in classify_all(&m).unwrap() {
        if l.case_tag != CaseTag::Positive {
            continue;
        }
        positive += 1;
        let wrong = h_gamma_partner_roots(&m, &l.gamma).unwrap();
        let rep = verify_orbit_structure_with_roots(&m, &l.gamma, &wrong, 10, 3).unwrap();
        assert!(!rep.ok(), "face {:?}", l.gamma.rays);
    }
    assert!(positive > 0);
}
