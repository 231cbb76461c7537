//! Brute-force oracles for cones, semigroups and regularity, on machine integers.

use std::collections::{HashMap, HashSet};

use rootmonoid::arith::to_i64;
use rootmonoid::lattice_core::*;

pub fn small(u: &LatticeVector) -> Vec<i64> {
    u.iter().map(|c| to_i64(c).unwrap()).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn ray_set(c: &Cone) -> HashSet<Vec<i64>> {
    c.rays().iter().map(small).collect()
}

pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

/// All integer points of `{u : <p, u> >= 0 for every ray p}` with l1-norm in `1..=d`.
pub fn dual_points(c: &Cone, d: i64) -> Vec<Vec<i64>> {
    let rays: Vec<Vec<i64>> = c.rays().iter().map(small).collect();
    l1_ball(c.rank(), d as u64)
        .iter()
        .map(small)
        .filter(|u| u.iter().any(|&x| x != 0) && rays.iter().all(|p| dot(p, u) >= 0))
        .collect()
}

/// Facets by brute force: hyperplanes through rank-many-minus-one rays
/// with every ray on one side.
pub fn brute_facets(c: &Cone) -> HashSet<Vec<usize>> {
    let n = c.rank();
    let rays: Vec<Vec<i64>> = c.rays().iter().map(small).collect();
    let mut out = HashSet::new();
    let m = rays.len();
    for mask in 0u32..(1 << m) {
        let sub: Vec<LatticeVector> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| c.rays()[i].clone()).collect();
        if sub.len() != n - 1 || vector_rank(&sub, n) != n - 1 {
            continue;
        }
        let normal = small(&kernel_basis(&sub, n)[0]);
        let vals: Vec<i64> = rays.iter().map(|p| dot(p, &normal)).collect();
        if vals.iter().all(|&x| x >= 0) || vals.iter().all(|&x| x <= 0) {
            out.insert((0..m).filter(|&i| vals[i] == 0).collect());
        }
    }
    out
}

/// Faces as intersections of facets, plus the whole cone.
pub fn brute_faces(c: &Cone) -> HashSet<Vec<usize>> {
    let facets: Vec<Vec<usize>> = brute_facets(c).into_iter().collect();
    let all: Vec<usize> = (0..c.rays().len()).collect();
    let mut out = HashSet::new();
    for mask in 0u64..(1 << facets.len()) {
        let mut cur = all.clone();
        for (i, f) in facets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                cur.retain(|r| f.contains(r));
            }
        }
        out.insert(cur);
    }
    out
}

/// Unimodular completion by search over vectors with entries in `-b..=b`.
pub fn completes_to_basis(rays: &[Vec<i64>], n: usize) -> bool {
    if rays.len() > n {
        return false;
    }
    let missing = n - rays.len();
    let b: i64 = if missing <= 2 { 2 } else { 1 };
    let pool: Vec<Vec<i64>> = l1_ball(n, (b * n as i64) as u64)
        .iter()
        .map(small)
        .filter(|u| u.iter().all(|x| x.abs() <= b))
        .collect();
    fn rec(rows: &mut Vec<Vec<i64>>, pool: &[Vec<i64>], start: usize, left: usize) -> bool {
        if left == 0 {
            return det(rows).abs() == 1;
        }
        for i in start..pool.len() {
            rows.push(pool[i].clone());
            if rec(rows, pool, i + 1, left - 1) {
                return true;
            }
            rows.pop();
        }
        false
    }
    rec(&mut rays.to_vec(), &pool, 0, missing)
}

/// Irreducible elements of the dual semigroup with l1-norm at most `d`.
pub fn brute_irreducibles(c: &Cone, d: i64) -> HashSet<Vec<i64>> {
    let pts = dual_points(c, d);
    let set: HashSet<Vec<i64>> = pts.iter().cloned().collect();
    pts.iter()
        .filter(|u| {
            !pts.iter().any(|a| {
                let b: Vec<i64> = u.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                set.contains(&b)
            })
        })
        .cloned()
        .collect()
}

/// `u` is a nonnegative combination of `gens`, checked by memoized descent.
pub fn representable(u: &[i64], gens: &[Vec<i64>], rays: &[Vec<i64>], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if u.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&r) = memo.get(u) {
        return r;
    }
    let ok = gens.iter().any(|g| {
        let w: Vec<i64> = u.iter().zip(g).map(|(a, b)| a - b).collect();
        rays.iter().all(|p| dot(p, &w) >= 0) && representable(&w, gens, rays, memo)
    });
    memo.insert(u.to_vec(), ok);
    ok
}

pub fn check_cone(c: &Cone) {
    let n = c.rank();
    // double involution
    assert_eq!(ray_set(&c.dual().dual()), ray_set(c));
    // facets and faces against brute force
    let facets: HashSet<Vec<usize>> = c.faces().into_iter().filter(|f| f.dim + 1 == n).map(|f| f.rays).collect();
    assert_eq!(facets, brute_facets(c));
    let fs = c.faces();
    assert_eq!(fs.iter().map(|f| f.rays.clone()).collect::<HashSet<_>>(), brute_faces(c));
    for f in &fs {
        for (i, p) in c.rays().iter().enumerate() {
            let val = to_i64(&pairing(p, &f.functional).unwrap()).unwrap();
            if f.contains_ray(i) {
                assert_eq!(val, 0);
            } else {
                assert!(val > 0);
            }
        }
    }
    // dual membership agrees with the primal inequalities
    let dual = c.dual();
    for u in l1_ball(n, 3) {
        let direct = c.rays().iter().all(|p| pairing(p, &u).unwrap() >= 0.into());
        assert_eq!(dual.contains(&u), direct);
    }
    // Hilbert basis: complete to degree 6, irreducible, and equal to the brute-force irreducibles
    let hb = hilbert_basis(&dual, DEFAULT_BOX_BOUND).unwrap();
    assert!(hb.certified);
    let gens: Vec<Vec<i64>> = hb.generators.iter().map(small).collect();
    let rays: Vec<Vec<i64>> = c.rays().iter().map(small).collect();
    let mut memo = Default::default();
    for u in dual_points(c, 6) {
        assert!(representable(&u, &gens, &rays, &mut memo), "{u:?} not generated");
    }
    let gset: HashSet<Vec<i64>> = gens.iter().cloned().collect();
    for g in &gens {
        for h in &gens {
            if g != h {
                let d: Vec<i64> = g.iter().zip(h).map(|(a, b)| a - b).collect();
                assert!(!rays.iter().all(|p| dot(p, &d) >= 0), "{g:?} reducible by {h:?}");
            }
        }
    }
    let maxdeg = gens.iter().map(|g| g.iter().map(|x| x.abs()).sum::<i64>()).max().unwrap();
    if maxdeg <= 6 {
        let brute: HashSet<Vec<i64>> = brute_irreducibles(c, maxdeg)
            .into_iter()
            .filter(|u| u.iter().map(|x| x.abs()).sum::<i64>() <= maxdeg)
            .collect();
        assert_eq!(brute, gset);
    }
    // regularity against unimodular completion
    for f in &fs {
        let rs: Vec<Vec<i64>> = c.face_rays(f).iter().map(small).collect();
        assert_eq!(is_regular_face(c, f).unwrap(), completes_to_basis(&rs, n), "face {:?}", f.rays);
    }
}

