use std::fs;
use std::io::Read;
use std::path::Path;

use rootmonoid::arith::{parse_rat, Int, Rat};
use rootmonoid::io::{parse_cone_json, parse_monoid_json, parse_point_json};
use rootmonoid::lattice_core::{Cone, LatticeVector};
use rootmonoid::monoid::{Point, RootMonoid, ToricVariety};
use rootmonoid::{Error, Result};

/// File contents, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn with_origin<T>(path: Option<&Path>, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", origin(path))),
        other => other,
    })
}

fn origin(path: Option<&Path>) -> String {
    match path {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "stdin".into(),
    }
}

pub fn load_cone(path: Option<&Path>) -> Result<Cone> {
    let text = read_source(path)?;
    with_origin(path, parse_cone_json(&text))
}

pub fn load_monoid(path: Option<&Path>) -> Result<RootMonoid> {
    let text = read_source(path)?;
    with_origin(path, parse_monoid_json(&text))
}

pub fn load_point(path: &Path, v: &ToricVariety) -> Result<Point> {
    let text = read_source(Some(path))?;
    with_origin(Some(path), parse_point_json(&text, v))
}

fn items(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

/// `"0,2"` as ray indices; the empty string is the zero face.
pub fn ray_list(s: &str) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = items(s)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("invalid ray index `{t}`"))))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

pub fn vector(s: &str, rank: usize) -> Result<LatticeVector> {
    let coords: Vec<Int> = items(s)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("invalid integer `{t}`"))))
        .collect::<Result<_>>()?;
    let v = LatticeVector::new(coords);
    v.check_rank(rank)?;
    Ok(v)
}

pub fn int_list(s: &str) -> Result<Vec<i64>> {
    items(s)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("invalid integer `{t}`"))))
        .collect()
}

pub fn rationals(s: &str) -> Result<Vec<Rat>> {
    items(s).map(parse_rat).collect()
}
