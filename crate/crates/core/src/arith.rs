//! Exact scalar helpers shared by every module: big integers, rationals,
//! binomial coefficients and integer powers of rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: &Int) -> Rat {
    BigRational::from_integer(n.clone())
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` for an integer exponent of either sign.
///
/// A zero base with a negative exponent is a caller bug and panics; callers
/// only raise torus coordinates, which are nonzero by construction.
pub fn rat_pow(base: &Rat, exp: &Int) -> Rat {
    if exp.is_zero() {
        return Rat::one();
    }
    let e = exp
        .abs()
        .to_u32()
        .expect("exponent exceeds u32; lattice data is outside desk scale");
    let numer = num_traits::pow(base.numer().clone(), e as usize);
    let denom = num_traits::pow(base.denom().clone(), e as usize);
    if exp.is_negative() {
        assert!(!numer.is_zero(), "zero raised to a negative power");
        Rat::new(denom, numer)
    } else {
        Rat::new(numer, denom)
    }
}

pub fn sign_pow(exp: i64) -> Rat {
    if exp.is_even() {
        Rat::one()
    } else {
        -Rat::one()
    }
}

pub fn to_i64(v: &Int) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Overflow(format!("integer {v} does not fit in 64 bits")))
}

pub fn format_rat(v: &Rat) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`; expected `p` or `p/q`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Serde bridge for a big integer: JSON numbers when the value fits in 64
/// bits, decimal strings otherwise. Both forms are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Signed(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Unsigned(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Text(t) => BigInt::from_str(t.trim())
                .map(JsonInt)
                .map_err(|_| serde::de::Error::custom(format!("invalid integer string `{t}`"))),
        }
    }
}

/// Serde bridge for a rational: `"p/q"` strings, plain integers, or integer strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Signed(v) => Ok(JsonRat(Rat::from_integer(BigInt::from(v)))),
            Repr::Unsigned(v) => Ok(JsonRat(Rat::from_integer(BigInt::from(v)))),
            Repr::Text(t) => parse_rat(&t)
                .map(JsonRat)
                .map_err(|e| serde::de::Error::custom(e.to_string())),
        }
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for JsonRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rat(&self.0))
    }
}

/// `#[serde(with = "rat_vec")]` for `Vec<Rat>` fields.
pub mod rat_vec {
    use super::{JsonRat, Rat};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<JsonRat> = v.iter().cloned().map(JsonRat).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        Ok(Vec::<JsonRat>::deserialize(d)?.into_iter().map(|j| j.0).collect())
    }
}
