//! Double description: extreme rays of `{u : <a_i, u> >= 0 for all i}`.
//!
//! Only the case needed here is supported: the constraint vectors span the
//! whole space, so the resulting cone is pointed.

use num_traits::{Signed, Zero};

use crate::arith::Int;
use crate::lattice_core::smith::{smith, IntMatrix};
use crate::lattice_core::vector::{dot, LatticeVector};

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn contains_all(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: LatticeVector,
    tight: Bits,
}

/// Rank of a list of vectors of length `n`.
pub fn vector_rank(vs: &[LatticeVector], n: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    smith(&IntMatrix::from_rows(vs, n)).rank
}

/// Saturated lattice basis of `{x : <row, x> = 0 for all rows}`.
pub fn kernel_basis(rows: &[LatticeVector], n: usize) -> Vec<LatticeVector> {
    if rows.is_empty() {
        return (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    }
    let s = smith(&IntMatrix::from_rows(rows, n));
    (s.rank..n).map(|j| s.v.col(j)).collect()
}

/// Extreme rays of the cone cut out by `constraints`, primitive, in
/// unspecified order. Returns `None` when the constraints do not span.
pub fn extreme_rays(constraints: &[LatticeVector], n: usize) -> Option<Vec<LatticeVector>> {
    let m = constraints.len();
    // greedy basis of constraints, in input order
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..m {
        let mut trial: Vec<LatticeVector> = basis.iter().map(|&j| constraints[j].clone()).collect();
        trial.push(constraints[i].clone());
        if vector_rank(&trial, n) == trial.len() {
            basis.push(i);
            if basis.len() == n {
                break;
            }
        }
    }
    if basis.len() < n {
        return None;
    }

    let tight_set = |v: &LatticeVector, processed: &[usize]| {
        let mut b = Bits::new(m);
        for &j in processed {
            if dot(&constraints[j], v).is_zero() {
                b.set(j);
            }
        }
        b
    };

    let mut rays: Vec<Ray> = Vec::new();
    for (pos, &i) in basis.iter().enumerate() {
        let others: Vec<LatticeVector> = basis
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, &j)| constraints[j].clone())
            .collect();
        let k = kernel_basis(&others, n);
        debug_assert_eq!(k.len(), 1);
        let mut v = k[0].primitive();
        if dot(&constraints[i], &v).is_negative() {
            v = -v;
        }
        rays.push(Ray {
            tight: tight_set(&v, &basis),
            v,
        });
    }

    for (a, c) in constraints.iter().enumerate() {
        if basis.contains(&a) {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(c, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                if common.count() + 2 < n {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == q || !rays[r].tight.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let mut v = rays[q].v.scale(&vals[p]);
                v.add_scaled(&rays[p].v, &-&vals[q]);
                let v = v.primitive();
                let mut tight = common;
                tight.set(a);
                next.push(Ray { v, tight });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut r = r;
            if vals[i].is_zero() {
                r.tight.set(a);
            }
            next.push(r);
        }
        rays = next;
    }
    Some(rays.into_iter().map(|r| r.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(rows: &[&[i64]]) -> Vec<LatticeVector> {
        rows.iter().map(|r| LatticeVector::from_i64(r)).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let mut r = extreme_rays(&vs(&[&[1, 0], &[0, 1]]), 2).unwrap();
        r.sort();
        assert_eq!(r, vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn redundant_constraints_are_ignored() {
        let mut r = extreme_rays(&vs(&[&[1, 0], &[1, 1], &[0, 1], &[2, 1]]), 2).unwrap();
        r.sort();
        assert_eq!(r, vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_pyramid() {
        let c = vs(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let mut r = extreme_rays(&c, 3).unwrap();
        r.sort();
        assert_eq!(r.len(), 4);
        for v in &r {
            let tight = c.iter().filter(|a| dot(a, v).is_zero()).count();
            assert!(tight >= 2);
        }
    }

    #[test]
    fn non_spanning_constraints_rejected() {
        assert!(extreme_rays(&vs(&[&[1, 0, 0], &[0, 1, 0]]), 3).is_none());
    }
}
