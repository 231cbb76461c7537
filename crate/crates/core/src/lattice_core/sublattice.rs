use num_integer::Integer;
use num_traits::Zero;

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice_core::smith::{smith, IntMatrix, Smith};
use crate::lattice_core::vector::LatticeVector;

/// A list of lattice vectors together with a cached Smith form of the
/// matrix having them as columns, for repeated coordinate solves.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    rank: usize,
    basis: Vec<LatticeVector>,
    snf: Smith,
}

impl LatticeBasis {
    pub fn new(rank: usize, basis: Vec<LatticeVector>) -> Result<Self> {
        for b in &basis {
            b.check_rank(rank)?;
        }
        let snf = smith(&IntMatrix::from_cols(&basis, rank));
        Ok(LatticeBasis { rank, basis, snf })
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// True when the vectors are linearly independent.
    pub fn is_independent(&self) -> bool {
        self.snf.rank == self.basis.len()
    }

    /// Integer coefficients `c` with `sum c_i b_i = u`.
    pub fn coords(&self, u: &LatticeVector) -> Result<Vec<Int>> {
        u.check_rank(self.rank)?;
        let ub = self.snf.u.mul_vec(u);
        let mut y = vec![Int::zero(); self.basis.len()];
        for (i, ubi) in ub.iter().enumerate() {
            if i < self.snf.rank {
                let (q, r) = ubi.div_rem(&self.snf.diag[i]);
                if !r.is_zero() {
                    return Err(Error::NotInSublattice);
                }
                y[i] = q;
            } else if !ubi.is_zero() {
                return Err(Error::NotInSublattice);
            }
        }
        Ok(self.snf.v.mul_vec(&y))
    }

    pub fn combine(&self, coeffs: &[Int]) -> LatticeVector {
        let mut out = LatticeVector::zero(self.rank);
        for (b, c) in self.basis.iter().zip(coeffs) {
            out.add_scaled(b, c);
        }
        out
    }
}

/// Coefficients of `u` in the integer span of `basis`.
pub fn decompose_in_sublattice(u: &LatticeVector, basis: &[LatticeVector]) -> Result<Vec<Int>> {
    LatticeBasis::new(u.rank(), basis.to_vec())?.coords(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let u = LatticeVector::from_i64(&[2, 0]);
        assert_eq!(
            decompose_in_sublattice(&u, &[LatticeVector::from_i64(&[1, 0])]).unwrap(),
            vec![Int::from(2)]
        );
        let u = LatticeVector::from_i64(&[1, 0]);
        assert!(matches!(
            decompose_in_sublattice(&u, &[LatticeVector::from_i64(&[2, 0])]),
            Err(Error::NotInSublattice)
        ));
        let u = LatticeVector::from_i64(&[1, 1]);
        assert!(decompose_in_sublattice(&u, &[LatticeVector::from_i64(&[1, 0])]).is_err());
    }

    #[test]
    fn round_trip() {
        let basis = vec![
            LatticeVector::from_i64(&[1, 2, 0]),
            LatticeVector::from_i64(&[0, 3, 1]),
        ];
        let lb = LatticeBasis::new(3, basis).unwrap();
        let u = LatticeVector::from_i64(&[2, -5, -3]);
        let c = lb.coords(&u).unwrap();
        assert_eq!(lb.combine(&c), u);
    }
}
