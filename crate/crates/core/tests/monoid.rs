mod common;

use common::*;
use rootmonoid::lattice_core::LatticeVector;
use rootmonoid::presets::{affine_space_monoid, quadric_cylinder_monoid};
use rootmonoid::sampling::{random_group_element, random_point, rng};

#[test]
fn cylinder_generators_are_the_q_vectors() {
    let m = quadric_cylinder_monoid(cylinder([0, 1, 1, 1, 0, 1, 2, 3])).unwrap();
    let q: Vec<LatticeVector> = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, -1],
    ]
    .iter()
    .map(|v| LatticeVector::from_i64(v))
    .collect();
    assert_eq!(m.variety().generators(), &q[..]);
}

#[test]
fn affine_closed_forms() {
    for (a, b) in affine_instances() {
        let m = affine_space_monoid(4, 2, &a, &b).unwrap();
        let mut r = rng(1);
        for _ in 0..20 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let z = m.multiply(&x, &y).unwrap();
            let want = affine_closed_form(2, &a, &b, &coords(&m, &x), &coords(&m, &y));
            assert_eq!(coords(&m, &z), want);
        }
    }
}

#[test]
fn cylinder_closed_form_matches() {
    for p in cylinder_instances() {
        let m = quadric_cylinder_monoid(p).unwrap();
        let mut r = rng(2);
        for _ in 0..20 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let z = m.multiply(&x, &y).unwrap();
            let want = cylinder_closed_form(p, &coords(&m, &x), &coords(&m, &y));
            assert_eq!(coords(&m, &z), want, "params {p:?}");
        }
    }
}

#[test]
fn group_model_agrees() {
    for p in cylinder_instances() {
        let m = quadric_cylinder_monoid(p).unwrap();
        let mut r = rng(3);
        for _ in 0..30 {
            let g = random_group_element(&m, &mut r);
            let h = random_group_element(&m, &mut r);
            let gh = m.group_multiply(&g, &h).unwrap();
            let lhs = m.to_point(&gh).unwrap();
            let rhs = m.multiply(&m.to_point(&g).unwrap(), &m.to_point(&h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(m.from_point(&m.to_point(&g).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn associativity_and_inverse() {
    for p in cylinder_instances() {
        let m = quadric_cylinder_monoid(p).unwrap();
        let mut r = rng(4);
        let e = m.neutral();
        for _ in 0..30 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let z = random_point(m.variety(), &mut r);
            let l = m.multiply(&m.multiply(&x, &y).unwrap(), &z).unwrap();
            let rr = m.multiply(&x, &m.multiply(&y, &z).unwrap()).unwrap();
            assert_eq!(l, rr);
            assert_eq!(m.multiply(&e, &x).unwrap(), x);
            assert_eq!(m.multiply(&x, &e).unwrap(), x);
            if m.is_invertible(&x) {
                let xi = m.inverse(&x).unwrap();
                assert_eq!(m.multiply(&x, &xi).unwrap(), e);
                assert_eq!(m.multiply(&xi, &x).unwrap(), e);
            }
        }
    }
}

#[test]
fn random_monoids_satisfy_the_axioms() {
    let mut r = rng(21);
    for _ in 0..6 {
        let m = rootmonoid::sampling::random_monoid(5, &mut r);
        let e = m.neutral();
        for _ in 0..15 {
            let x = random_point(m.variety(), &mut r);
            let y = random_point(m.variety(), &mut r);
            let z = random_point(m.variety(), &mut r);
            let l = m.multiply(&m.multiply(&x, &y).unwrap(), &z).unwrap();
            assert_eq!(l, m.multiply(&x, &m.multiply(&y, &z).unwrap()).unwrap());
            assert_eq!(m.multiply(&e, &x).unwrap(), x);
            assert_eq!(m.multiply(&x, &e).unwrap(), x);
            let u = rootmonoid::sampling::random_invertible_point(&m, &mut r).unwrap();
            assert!(m.is_invertible(&u));
            assert_eq!(m.multiply(&u, &m.inverse(&u).unwrap()).unwrap(), e);
        }
    }
}

#[test]
fn activeness_of_the_affine_instances() {
    let [(a1, b1), (a2, b2)] = affine_instances();
    assert!(!affine_space_monoid(4, 2, &a1, &b1).unwrap().is_active());
    assert!(affine_space_monoid(4, 2, &a2, &b2).unwrap().is_active());
}
