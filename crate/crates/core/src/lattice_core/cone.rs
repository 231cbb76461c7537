use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice_core::dd::{extreme_rays, vector_rank};
use crate::lattice_core::vector::{dot, LatticeVector};

/// Ordering used for every computed list of lattice vectors: by l1-norm,
/// then lexicographically descending (so unit vectors come out as e_1, e_2, ...).
pub fn canonical_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    a.l1_norm().cmp(&b.l1_norm()).then_with(|| b.cmp(a))
}

/// A full-dimensional, strongly convex rational polyhedral cone, given by
/// its primitive extreme rays. Facet normals are primitive inward normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    rays: Vec<LatticeVector>,
    facets: Vec<LatticeVector>,
}

/// Face lattices grow exponentially with the rank; beyond this nothing is practical.
pub const MAX_RANK: usize = 12;

/// A face of a cone, named by the sorted indices of the cone rays it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub rays: Vec<usize>,
    /// Vanishes exactly on the face rays, positive on all other rays.
    pub functional: LatticeVector,
    pub dim: usize,
}

impl Face {
    pub fn contains_ray(&self, i: usize) -> bool {
        self.rays.binary_search(&i).is_ok()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.rays.iter().all(|&i| other.contains_ray(i))
    }
}

impl Cone {
    /// Validates the ray list: nonzero primitive distinct rays, each one
    /// extreme, spanning a pointed full-dimensional cone. Ray order is kept.
    pub fn new(rank: usize, rays: Vec<LatticeVector>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidCone("ambient rank must be positive".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidCone(format!("rank {rank} exceeds the supported maximum {MAX_RANK}")));
        }
        for r in &rays {
            r.check_rank(rank)?;
            if r.is_zero() {
                return Err(Error::InvalidCone("zero ray".into()));
            }
            if !r.is_primitive() {
                return Err(Error::InvalidCone(format!("ray {r} is not primitive")));
            }
        }
        let distinct: HashSet<&LatticeVector> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::InvalidCone("repeated ray".into()));
        }
        if vector_rank(&rays, rank) < rank {
            return Err(Error::InvalidCone(
                "rays do not span the lattice; only full-dimensional cones are supported".into(),
            ));
        }
        let mut facets = extreme_rays(&rays, rank)
            .ok_or_else(|| Error::InvalidCone("rays do not span".into()))?;
        facets.sort_by(canonical_cmp);
        if vector_rank(&facets, rank) < rank {
            return Err(Error::InvalidCone("cone contains a line".into()));
        }
        for r in &rays {
            let tight: Vec<LatticeVector> = facets
                .iter()
                .filter(|m| dot(m, r).is_zero())
                .cloned()
                .collect();
            if vector_rank(&tight, rank) != rank - 1 {
                return Err(Error::InvalidCone(format!("ray {r} is not extreme")));
            }
        }
        Ok(Cone { rank, rays, facets })
    }

    /// The cone generated by arbitrary nonzero vectors: keeps the primitive
    /// extreme rays in first-seen order.
    pub fn from_generators(rank: usize, gens: &[LatticeVector]) -> Result<Self> {
        let mut prim: Vec<LatticeVector> = Vec::new();
        for g in gens {
            g.check_rank(rank)?;
            if g.is_zero() {
                continue;
            }
            let p = g.primitive();
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        if vector_rank(&prim, rank) < rank {
            return Err(Error::InvalidCone("generators do not span the lattice".into()));
        }
        let facets = extreme_rays(&prim, rank)
            .ok_or_else(|| Error::InvalidCone("generators do not span".into()))?;
        if vector_rank(&facets, rank) < rank {
            return Err(Error::InvalidCone("cone contains a line".into()));
        }
        let rays: Vec<LatticeVector> = prim
            .into_iter()
            .filter(|r| {
                let tight: Vec<LatticeVector> = facets
                    .iter()
                    .filter(|m| dot(m, r).is_zero())
                    .cloned()
                    .collect();
                vector_rank(&tight, rank) == rank - 1
            })
            .collect();
        Cone::new(rank, rays)
    }

    pub fn from_i64(rank: usize, rays: &[&[i64]]) -> Result<Self> {
        Self::new(rank, rays.iter().map(|r| LatticeVector::from_i64(r)).collect())
    }

    /// The positive orthant spanned by the standard basis.
    pub fn orthant(rank: usize) -> Self {
        Cone::new(rank, (0..rank).map(|i| LatticeVector::unit(rank, i)).collect())
            .expect("orthant is a valid cone")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        v.rank() == self.rank && self.facets.iter().all(|m| !dot(m, v).is_negative())
    }

    /// The dual cone; its rays are this cone's facet normals in canonical order.
    pub fn dual(&self) -> Cone {
        let mut rays = self.facets.clone();
        rays.sort_by(canonical_cmp);
        Cone::new(self.rank, rays).expect("dual of a valid cone is valid")
    }

    fn face_from_set(&self, rays: Vec<usize>) -> Face {
        let mut functional = LatticeVector::zero(self.rank);
        for m in &self.facets {
            if rays.iter().all(|&i| dot(m, &self.rays[i]).is_zero()) {
                functional = &functional + m;
            }
        }
        let vs: Vec<LatticeVector> = rays.iter().map(|&i| self.rays[i].clone()).collect();
        let dim = vector_rank(&vs, self.rank);
        Face {
            rays,
            functional,
            dim,
        }
    }

    /// Smallest face containing the given rays.
    pub fn smallest_face_containing(&self, rays: &[usize]) -> Result<Face> {
        if let Some(&bad) = rays.iter().find(|&&i| i >= self.rays.len()) {
            return Err(Error::NotAFace(vec![bad]));
        }
        let mut functional = LatticeVector::zero(self.rank);
        for m in &self.facets {
            if rays.iter().all(|&i| dot(m, &self.rays[i]).is_zero()) {
                functional = &functional + m;
            }
        }
        let set: Vec<usize> = (0..self.rays.len())
            .filter(|&i| dot(&functional, &self.rays[i]).is_zero())
            .collect();
        Ok(self.face_from_set(set))
    }

    /// The face whose ray set is exactly `rays`; error when no such face exists.
    pub fn face(&self, rays: &[usize]) -> Result<Face> {
        let want: BTreeSet<usize> = rays.iter().copied().collect();
        let f = self.smallest_face_containing(rays)?;
        if f.rays.iter().copied().collect::<BTreeSet<_>>() != want {
            return Err(Error::NotAFace(want.into_iter().collect()));
        }
        Ok(f)
    }

    pub fn full_face(&self) -> Face {
        self.face_from_set((0..self.rays.len()).collect())
    }

    pub fn zero_face(&self) -> Face {
        self.face_from_set(Vec::new())
    }

    /// All faces, from `{0}` up to the cone itself, sorted by (dim, rays).
    pub fn faces(&self) -> Vec<Face> {
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|m| {
                (0..self.rays.len())
                    .filter(|&i| dot(m, &self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let all: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut queue = vec![all.clone()];
        seen.insert(all);
        while let Some(cur) = queue.pop() {
            for f in &facet_sets {
                let next: BTreeSet<usize> = cur.intersection(f).copied().collect();
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|s| self.face_from_set(s.into_iter().collect()))
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.rays.cmp(&b.rays)));
        faces
    }

    /// Checks that `face` is a face of this cone with a valid certificate.
    pub fn check_face(&self, face: &Face) -> Result<()> {
        let ok = face.functional.rank() == self.rank
            && self.rays.iter().enumerate().all(|(i, r)| {
                let v = dot(&face.functional, r);
                if face.contains_ray(i) {
                    v.is_zero()
                } else {
                    v.is_positive()
                }
            })
            && self.contains_dual(&face.functional)
            && face.rays.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(())
        } else {
            Err(Error::NotAFace(face.rays.clone()))
        }
    }

    fn contains_dual(&self, u: &LatticeVector) -> bool {
        self.rays.iter().all(|r| !dot(r, u).is_negative())
    }

    /// The face `gamma* = gamma^perp ∩ dual` of the dual cone, as a face of `dual`.
    pub fn dual_face(&self, gamma: &Face, dual: &Cone) -> Face {
        let rays: Vec<usize> = (0..dual.rays.len())
            .filter(|&j| gamma.rays.iter().all(|&i| dot(&self.rays[i], &dual.rays[j]).is_zero()))
            .collect();
        dual.face(&rays).expect("orthogonal dual rays form a face")
    }

    /// Ray vectors of a face.
    pub fn face_rays(&self, face: &Face) -> Vec<LatticeVector> {
        face.rays.iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn is_orthogonal_to_face(&self, face: &Face, u: &LatticeVector) -> bool {
        face.rays.iter().all(|&i| dot(&self.rays[i], u).is_zero())
    }
}
