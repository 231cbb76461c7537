//! JSON file formats for cones, root pairs, monoids and points.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::JsonRat;
use crate::demazure::{DemazureRootPairSet, RootPair};
use crate::error::{Error, Result};
use crate::lattice_core::{Cone, LatticeVector};
use crate::monoid::{Point, RootMonoid, ToricVariety};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub rank: usize,
    pub rays: Vec<LatticeVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootPairsFile {
    pub tau_rays: Vec<usize>,
    pub pairs: Vec<RootPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub cone: ConeFile,
    pub tau_rays: Vec<usize>,
    pub pairs: Vec<RootPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointFile {
    pub face_rays: Vec<usize>,
    pub basis: Vec<LatticeVector>,
    pub values: Vec<JsonRat>,
}

/// Deserializes with the failing field path and position in the message.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(de).map_err(|e| {
        // the serde_json message already ends with the line and column
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            Error::Parse(inner.to_string())
        } else {
            Error::Parse(format!("at `{path}`: {inner}"))
        }
    })?;
    Ok(value)
}

/// Pretty JSON with arrays of scalars kept on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("file types serialize");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalars serialize"));
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

impl ConeFile {
    pub fn build(&self) -> Result<Cone> {
        for r in &self.rays {
            r.check_rank(self.rank)?;
        }
        Cone::new(self.rank, self.rays.clone())
    }

    pub fn from_cone(c: &Cone) -> Self {
        ConeFile {
            rank: c.rank(),
            rays: c.rays().to_vec(),
        }
    }
}

impl RootPairsFile {
    pub fn into_set(self) -> DemazureRootPairSet {
        DemazureRootPairSet {
            tau_rays: self.tau_rays,
            pairs: self.pairs,
        }
    }
}

impl MonoidFile {
    pub fn build(&self) -> Result<RootMonoid> {
        let cone = self.cone.build()?;
        for p in &self.pairs {
            p.e1.check_rank(cone.rank())?;
            p.e2.check_rank(cone.rank())?;
        }
        let roots = DemazureRootPairSet {
            tau_rays: self.tau_rays.clone(),
            pairs: self.pairs.clone(),
        };
        RootMonoid::from_parts(cone, &self.tau_rays, roots)
    }

    pub fn from_monoid(m: &RootMonoid) -> Self {
        MonoidFile {
            cone: ConeFile::from_cone(m.cone()),
            tau_rays: m.roots().tau_rays.clone(),
            pairs: m.roots().pairs.clone(),
        }
    }
}

impl PointFile {
    pub fn build(&self, v: &ToricVariety) -> Result<Point> {
        for b in &self.basis {
            b.check_rank(v.rank())?;
        }
        let face = v.face_id(&self.face_rays)?;
        let values: Vec<_> = self.values.iter().map(|x| x.0.clone()).collect();
        v.point_from_basis_values(face, &self.basis, &values)
    }

    /// The point on its canonical chart basis.
    pub fn from_point(v: &ToricVariety, x: &Point) -> Self {
        PointFile {
            face_rays: v.face(x.face).rays.clone(),
            basis: v.chart(x.face).basis.vectors().to_vec(),
            values: x.values.iter().cloned().map(JsonRat).collect(),
        }
    }
}

pub fn parse_cone_json(text: &str) -> Result<Cone> {
    from_json::<ConeFile>(text)?.build()
}

pub fn parse_root_pairs_json(text: &str) -> Result<DemazureRootPairSet> {
    Ok(from_json::<RootPairsFile>(text)?.into_set())
}

pub fn parse_monoid_json(text: &str) -> Result<RootMonoid> {
    from_json::<MonoidFile>(text)?.build()
}

pub fn parse_point_json(text: &str, v: &ToricVariety) -> Result<Point> {
    from_json::<PointFile>(text)?.build(v)
}

/// A JSON list of lattice vectors, each of rank `rank`.
pub fn parse_vectors_json(text: &str, rank: usize) -> Result<Vec<LatticeVector>> {
    let vs: Vec<LatticeVector> = from_json(text)?;
    for x in &vs {
        x.check_rank(rank)?;
    }
    Ok(vs)
}

pub fn cone_to_json(c: &Cone) -> String {
    to_json(&ConeFile::from_cone(c))
}

pub fn monoid_to_json(m: &RootMonoid) -> String {
    to_json(&MonoidFile::from_monoid(m))
}

pub fn point_to_json(v: &ToricVariety, x: &Point) -> String {
    to_json(&PointFile::from_point(v, x))
}
