//! Integer lattices, rational polyhedral cones, faces and semigroups.

mod cone;
mod dd;
mod hilbert;
pub mod smith;
mod sublattice;
mod vector;

pub use cone::{canonical_cmp, Cone, Face, MAX_RANK};
pub use dd::{kernel_basis, vector_rank};
pub use hilbert::{hilbert_basis, hilbert_basis_bounded, l1_ball, triangulation, SemigroupBasis, PARALLELEPIPED_LIMIT};
pub use sublattice::{decompose_in_sublattice, LatticeBasis};
pub use vector::{pairing, LatticeVector};

pub(crate) use vector::dot;

use crate::error::Result;
use smith::{smith, IntMatrix};

/// Box radius used by the Hilbert fallback when nothing else is requested.
pub const DEFAULT_BOX_BOUND: u64 = 12;

pub fn dual_cone(sigma: &Cone) -> Cone {
    sigma.dual()
}

pub fn faces(sigma: &Cone) -> Vec<Face> {
    sigma.faces()
}

/// True iff the rays of `tau` extend to a basis of the lattice.
pub fn is_regular_face(sigma: &Cone, tau: &Face) -> Result<bool> {
    sigma.check_face(tau)?;
    let rays = sigma.face_rays(tau);
    if rays.is_empty() {
        return Ok(true);
    }
    let s = smith(&IntMatrix::from_rows(&rays, sigma.rank()));
    Ok(s.rank == rays.len() && s.diag[..s.rank].iter().all(|d| d == &1.into()))
}

/// Generators of `gamma^perp ∩ S_sigma`, taken from a Hilbert basis of `S_sigma`.
pub fn perp_generators(sigma: &Cone, basis: &SemigroupBasis, gamma: &Face) -> Vec<LatticeVector> {
    basis
        .generators
        .iter()
        .filter(|g| sigma.is_orthogonal_to_face(gamma, g))
        .cloned()
        .collect()
}

pub fn perp_semigroup(sigma: &Cone, gamma: &Face) -> Result<Vec<LatticeVector>> {
    sigma.check_face(gamma)?;
    let hb = hilbert_basis(&sigma.dual(), DEFAULT_BOX_BOUND)?;
    Ok(perp_generators(sigma, &hb, gamma))
}

/// Sum of the ray generators of a face of the dual cone.
pub fn relative_interior_point(dual: &Cone, face: &Face) -> LatticeVector {
    let mut out = LatticeVector::zero(dual.rank());
    for &j in &face.rays {
        out = &out + &dual.rays()[j];
    }
    out
}
