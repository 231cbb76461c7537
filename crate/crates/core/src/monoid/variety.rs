use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat_pow, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice_core::{
    dot, hilbert_basis_bounded, kernel_basis, Cone, Face, LatticeBasis, LatticeVector, SemigroupBasis,
    DEFAULT_BOX_BOUND,
};

/// Larger semigroups make every chart and product computation impractical.
pub const MAX_GENERATORS: usize = 512;

/// Coordinates on the torus orbit of one face: a lattice basis of `M ∩ γ^perp`
/// and the semigroup generators lying in `γ^perp`.
#[derive(Clone, Debug)]
pub struct FaceChart {
    pub basis: LatticeBasis,
    /// Indices of semigroup generators orthogonal to the face.
    pub generators: Vec<usize>,
    /// Row `j` expresses basis vector `j` through `generators`.
    gen_expr: Vec<Vec<Int>>,
}

/// A point of the toric variety: its orbit (a face index) and nonzero values
/// of the character on the orbit's chart basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub face: usize,
    #[serde(with = "crate::arith::rat_vec")]
    pub values: Vec<Rat>,
}

/// `X_σ` with everything precomputed for point arithmetic.
#[derive(Clone, Debug)]
pub struct ToricVariety {
    cone: Cone,
    dual: Cone,
    faces: Vec<Face>,
    face_index: HashMap<Vec<usize>, usize>,
    semigroup: SemigroupBasis,
    charts: Vec<FaceChart>,
}

impl ToricVariety {
    pub fn new(cone: Cone) -> Result<Self> {
        let dual = cone.dual();
        let semigroup = hilbert_basis_bounded(&dual, DEFAULT_BOX_BOUND, MAX_GENERATORS)?;
        if !semigroup.certified {
            return Err(Error::HilbertBoxOverflow(
                "semigroup generators could not be certified".into(),
            ));
        }
        let faces = cone.faces();
        let n = cone.rank();
        let mut charts = Vec::with_capacity(faces.len());
        for f in &faces {
            let basis = LatticeBasis::new(n, kernel_basis(&cone.face_rays(f), n))?;
            let generators: Vec<usize> = (0..semigroup.generators.len())
                .filter(|&i| cone.is_orthogonal_to_face(f, &semigroup.generators[i]))
                .collect();
            let gens = LatticeBasis::new(
                n,
                generators
                    .iter()
                    .map(|&i| semigroup.generators[i].clone())
                    .collect(),
            )?;
            let gen_expr = basis
                .vectors()
                .iter()
                .map(|b| gens.coords(b))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| {
                    Error::Inconsistent("face generators do not span the orthogonal lattice".into())
                })?;
            charts.push(FaceChart {
                basis,
                generators,
                gen_expr,
            });
        }
        let face_index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.rays.clone(), i))
            .collect();
        Ok(ToricVariety {
            cone,
            dual,
            faces,
            face_index,
            semigroup,
            charts,
        })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dual(&self) -> &Cone {
        &self.dual
    }

    pub fn rank(&self) -> usize {
        self.cone.rank()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn chart(&self, id: usize) -> &FaceChart {
        &self.charts[id]
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.semigroup.generators
    }

    pub fn semigroup(&self) -> &SemigroupBasis {
        &self.semigroup
    }

    /// Index of the face with exactly these rays.
    pub fn face_id(&self, rays: &[usize]) -> Result<usize> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        key.dedup();
        self.face_index
            .get(&key)
            .copied()
            .ok_or(Error::NotAFace(key))
    }

    pub fn in_semigroup(&self, u: &LatticeVector) -> bool {
        self.dual.contains(u)
    }

    pub fn distinguished_point(&self, face: usize) -> Point {
        Point {
            face,
            values: vec![Rat::one(); self.charts[face].basis.len()],
        }
    }

    /// Validates a point: known face, right number of nonzero values.
    pub fn check_point(&self, x: &Point) -> Result<()> {
        let chart = self
            .charts
            .get(x.face)
            .ok_or_else(|| Error::InvalidPoint(format!("unknown face index {}", x.face)))?;
        if x.values.len() != chart.basis.len() {
            return Err(Error::DimensionMismatch {
                expected: chart.basis.len(),
                found: x.values.len(),
            });
        }
        if x.values.iter().any(Zero::is_zero) {
            return Err(Error::InvalidPoint("torus values must be nonzero".into()));
        }
        Ok(())
    }

    /// `χ^u(x)` for `u ∈ S_σ`.
    pub fn evaluate(&self, x: &Point, u: &LatticeVector) -> Result<Rat> {
        u.check_rank(self.rank())?;
        if !self.in_semigroup(u) {
            return Err(Error::NotInSemigroup(u.to_string()));
        }
        self.evaluate_local(x, u)
    }

    /// `χ^u(x)` for any `u` regular near the orbit of `x`, i.e. `u ∈ γ^∨`.
    pub fn evaluate_local(&self, x: &Point, u: &LatticeVector) -> Result<Rat> {
        u.check_rank(self.rank())?;
        let face = &self.faces[x.face];
        let mut on_face = true;
        for &i in &face.rays {
            let v = dot(&self.cone.rays()[i], u);
            if v.is_negative() {
                return Err(Error::OutOfChart(u.to_string()));
            }
            if !v.is_zero() {
                on_face = false;
            }
        }
        if !on_face {
            return Ok(Rat::zero());
        }
        let coords = self.charts[x.face].basis.coords(u)?;
        Ok(torus_value(&x.values, &coords))
    }

    /// Rebuilds a point from its values on the semigroup generators.
    pub fn point_from_generator_values(&self, vals: &[Rat]) -> Result<Point> {
        let gens = &self.semigroup.generators;
        if vals.len() != gens.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                found: vals.len(),
            });
        }
        let rays: Vec<usize> = (0..self.cone.rays().len())
            .filter(|&i| {
                gens.iter()
                    .zip(vals)
                    .all(|(g, v)| v.is_zero() || dot(&self.cone.rays()[i], g).is_zero())
            })
            .collect();
        let face = self
            .face_index
            .get(&rays)
            .copied()
            .ok_or_else(|| Error::InvalidPoint(format!("support pattern gives non-face {rays:?}")))?;
        let chart = &self.charts[face];
        for (i, v) in vals.iter().enumerate() {
            if v.is_zero() == chart.generators.contains(&i) {
                return Err(Error::InvalidPoint(
                    "zero pattern of generator values is not an orbit pattern".into(),
                ));
            }
        }
        let sub: Vec<Rat> = chart.generators.iter().map(|&i| vals[i].clone()).collect();
        let values: Vec<Rat> = chart
            .gen_expr
            .iter()
            .map(|expr| torus_value(&sub, expr))
            .collect();
        let p = Point { face, values };
        for &i in &chart.generators {
            let c = chart.basis.coords(&gens[i])?;
            if torus_value(&p.values, &c) != vals[i] {
                return Err(Error::InvalidPoint(format!(
                    "generator values are not multiplicative at generator {}",
                    gens[i]
                )));
            }
        }
        Ok(p)
    }

    /// Values on all semigroup generators.
    pub fn generator_values(&self, x: &Point) -> Vec<Rat> {
        self.semigroup
            .generators
            .iter()
            .map(|g| self.evaluate_local(x, g).expect("generators lie in S_σ"))
            .collect()
    }

    /// Point of the orbit of `face` with given values of `χ^u` on the chart basis
    /// of another lattice basis: converts `(basis, values)` to the canonical chart.
    pub fn point_from_basis_values(
        &self,
        face: usize,
        basis: &[LatticeVector],
        values: &[Rat],
    ) -> Result<Point> {
        let chart = self
            .charts
            .get(face)
            .ok_or_else(|| Error::InvalidPoint(format!("unknown face index {face}")))?;
        if basis.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: values.len(),
            });
        }
        if basis.len() != chart.basis.len() {
            return Err(Error::DimensionMismatch {
                expected: chart.basis.len(),
                found: basis.len(),
            });
        }
        if values.iter().any(Zero::is_zero) {
            return Err(Error::InvalidPoint("torus values must be nonzero".into()));
        }
        let given = LatticeBasis::new(self.rank(), basis.to_vec())?;
        for b in basis {
            if !self.cone.is_orthogonal_to_face(&self.faces[face], b) {
                return Err(Error::InvalidPoint(format!("basis vector {b} is not orthogonal to the face")));
            }
        }
        let out = chart
            .basis
            .vectors()
            .iter()
            .map(|v| {
                let c = given
                    .coords(v)
                    .map_err(|_| Error::InvalidPoint("given vectors do not span the orbit lattice".into()))?;
                checked_torus_value(values, &c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Point { face, values: out })
    }
}

/// Largest exponent applied to a user-supplied value other than `±1`.
const MAX_EXPONENT: u32 = 1 << 16;

/// [`torus_value`] for untrusted input: refuses exponents whose result
/// cannot be held in memory.
fn checked_torus_value(values: &[Rat], coords: &[Int]) -> Result<Rat> {
    for (v, c) in values.iter().zip(coords) {
        let unit = v.is_integer() && v.numer().abs().is_one();
        if !unit && c.abs() > Int::from(MAX_EXPONENT) {
            return Err(Error::Overflow(format!("change of basis needs exponent {c}")));
        }
    }
    Ok(torus_value(values, coords))
}

/// `prod values_j ^ coords_j`.
pub(crate) fn torus_value(values: &[Rat], coords: &[Int]) -> Rat {
    let mut acc = Rat::one();
    for (v, c) in values.iter().zip(coords) {
        if !c.is_zero() {
            acc *= rat_pow(v, c);
        }
    }
    acc
}
