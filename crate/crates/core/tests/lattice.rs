mod common;

use std::collections::HashSet;

use common::oracles::*;
use proptest::prelude::*;
use rootmonoid::arith::to_i64;
use rootmonoid::lattice_core::*;
use rootmonoid::presets::quadric_cylinder_cone;
use rootmonoid::sampling::{random_cone, rng};

fn v(c: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(c)
}

#[test]
fn pairing_examples() {
    let q5 = v(&[1, 1, 0, -1]);
    assert_eq!(pairing(&v(&[1, 0, 0, 0]), &q5).unwrap(), 1.into());
    assert_eq!(pairing(&v(&[0, 1, 0, 1]), &q5).unwrap(), 0.into());
    assert_eq!(pairing(&v(&[0, 0, 0, 0]), &q5).unwrap(), 0.into());
    assert!(pairing(&v(&[1, 0]), &q5).is_err());
}

#[test]
fn orthant_basics() {
    let c = Cone::orthant(2);
    assert_eq!(ray_set(&dual_cone(&c)), ray_set(&c));
    assert_eq!(faces(&c).len(), 4);
    let hb = hilbert_basis(&c.dual(), DEFAULT_BOX_BOUND).unwrap();
    assert!(hb.certified);
    assert_eq!(hb.generators, vec![v(&[1, 0]), v(&[0, 1])]);
    let dual = c.dual();
    assert_eq!(relative_interior_point(&dual, &dual.full_face()), v(&[1, 1]));
    assert_eq!(relative_interior_point(&dual, &dual.zero_face()), v(&[0, 0]));
}

#[test]
fn cylinder_dual_and_semigroup() {
    let c = quadric_cylinder_cone();
    let q: Vec<LatticeVector> = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, -1]]
        .iter()
        .map(|x| v(x))
        .collect();
    let want: HashSet<Vec<i64>> = q.iter().map(small).collect();
    assert_eq!(ray_set(&c.dual()), want);
    let hb = hilbert_basis(&c.dual(), DEFAULT_BOX_BOUND).unwrap();
    assert!(hb.certified);
    assert_eq!(hb.generators, q);
    assert_eq!(&q[0] + &q[1], &q[3] + &q[4]);
    let tau = c.face(&[0, 1]).unwrap();
    assert_eq!(tau.dim, 2);
    assert!(is_regular_face(&c, &tau).unwrap());
    assert_eq!(perp_semigroup(&c, &tau).unwrap(), vec![q[2].clone(), q[3].clone()]);
    assert!(perp_semigroup(&c, &c.full_face()).unwrap().is_empty());
    assert_eq!(perp_semigroup(&c, &c.zero_face()).unwrap(), q);
    let dual = c.dual();
    let u = relative_interior_point(&dual, &c.dual_face(&tau, &dual));
    let pairs: Vec<i64> = c.rays().iter().map(|p| to_i64(&pairing(p, &u).unwrap()).unwrap()).collect();
    assert_eq!(&pairs[..2], &[0, 0]);
    assert!(pairs[2..].iter().all(|&x| x > 0));
}

#[test]
fn regularity_examples() {
    let c = Cone::from_i64(2, &[&[1, 1], &[1, -1]]).unwrap();
    assert!(!is_regular_face(&c, &c.full_face()).unwrap());
    assert!(is_regular_face(&c, &c.zero_face()).unwrap());
    assert!(is_regular_face(&c, &c.face(&[0]).unwrap()).unwrap());
}

#[test]
fn sublattice_decomposition() {
    assert_eq!(decompose_in_sublattice(&v(&[2, 0]), &[v(&[1, 0])]).unwrap(), vec![2.into()]);
    assert!(decompose_in_sublattice(&v(&[1, 0]), &[v(&[2, 0])]).is_err());
    let basis = [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 0, 1])];
    let c = decompose_in_sublattice(&v(&[1, 1, 0, -1]), &basis).unwrap();
    let mut back = LatticeVector::zero(4);
    for (b, k) in basis.iter().zip(&c) {
        back.add_scaled(b, k);
    }
    assert_eq!(back, v(&[1, 1, 0, -1]));
}

#[test]
fn simplicial_three_cone_has_eight_faces() {
    let c = Cone::from_i64(3, &[&[1, 0, 0], &[1, 2, 0], &[1, 1, 3]]).unwrap();
    assert_eq!(faces(&c).len(), 8);
    assert_eq!(faces(&c).into_iter().map(|f| f.rays).collect::<HashSet<_>>(), brute_faces(&c));
}

#[test]
fn two_dimensional_hilbert_scan() {
    let c = Cone::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap();
    let hb = hilbert_basis(&c.dual(), DEFAULT_BOX_BOUND).unwrap();
    assert_eq!(hb.generators.iter().map(small).collect::<HashSet<_>>(), brute_irreducibles(&c, 6));
}

#[test]
fn lattice_oracles_on_fixed_cones() {
    check_cone(&Cone::orthant(3));
    check_cone(&quadric_cylinder_cone());
    check_cone(&Cone::from_i64(2, &[&[1, 1], &[1, -1]]).unwrap());
    check_cone(&Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn lattice_oracles_on_random_cones(seed in any::<u64>(), rank in 1usize..=4) {
        let c = random_cone(rank, &mut rng(seed));
        check_cone(&c);
    }

    #[test]
    fn decomposition_round_trips(a in proptest::collection::vec(-4i64..=4, 3), b in proptest::collection::vec(-4i64..=4, 3), u in proptest::collection::vec(-6i64..=6, 3)) {
        let basis: Vec<LatticeVector> = [a, b].iter().map(|x| v(x)).filter(|x| !x.is_zero()).collect();
        prop_assume!(vector_rank(&basis, 3) == basis.len());
        if let Ok(cs) = decompose_in_sublattice(&v(&u), &basis) {
            let mut back = LatticeVector::zero(3);
            for (bv, k) in basis.iter().zip(&cs) {
                back.add_scaled(bv, k);
            }
            prop_assert_eq!(back, v(&u));
        }
    }
}
