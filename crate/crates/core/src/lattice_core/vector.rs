use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{Int, JsonInt};
use crate::error::{Error, Result};

/// An element of `N` or `M`, stored as arbitrary-precision coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Int>);

impl LatticeVector {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![Int::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = Int::one();
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Int) -> Self {
        LatticeVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add_scaled(&mut self, other: &LatticeVector, k: &Int) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * k;
        }
    }

    pub fn gcd(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd().is_one()
    }

    /// Divides by the coordinate gcd, keeping the direction.
    pub fn primitive(&self) -> Self {
        let g = self.gcd();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|c| c / &g).collect())
    }

    /// Primitive representative of the line through `self`, first nonzero
    /// coordinate positive. Only for free lattice vectors, never cone rays.
    pub fn normalized_line(&self) -> Self {
        let p = self.primitive();
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -p,
            _ => p,
        }
    }

    pub fn l1_norm(&self) -> Int {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn max_norm(&self) -> Int {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(Int::zero)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: self.rank(),
            });
        }
        Ok(())
    }
}

impl Deref for LatticeVector {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<JsonInt> = self.0.iter().cloned().map(JsonInt).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<JsonInt>::deserialize(d)?;
        Ok(LatticeVector(v.into_iter().map(|j| j.0).collect()))
    }
}

/// The natural pairing `<p, u>` between `N` and `M`.
pub fn pairing(p: &LatticeVector, u: &LatticeVector) -> Result<Int> {
    u.check_rank(p.rank())?;
    Ok(dot(p, u))
}

/// Pairing without the rank check, for internal hot paths.
pub(crate) fn dot(p: &[Int], u: &[Int]) -> Int {
    p.iter().zip(u).map(|(a, b)| a * b).sum()
}
