#![allow(dead_code)]

pub mod oracles;

use num_traits::{One, Zero};
use rootmonoid::arith::{rat_pow, Int, Rat};
use rootmonoid::monoid::{Point, RootMonoid};
use rootmonoid::presets::CylinderParams;

pub fn pow(x: &Rat, e: i64) -> Rat {
    rat_pow(x, &Int::from(e))
}

/// Monomial `prod x_i^{e_i}`.
pub fn mono(x: &[Rat], e: &[i64]) -> Rat {
    x.iter().zip(e).fold(Rat::one(), |acc, (v, &k)| acc * pow(v, k))
}

/// Generator values of a point, in the order the variety stores them.
pub fn coords(m: &RootMonoid, x: &Point) -> Vec<Rat> {
    m.variety().generator_values(x)
}

/// Closed-form product on affine space: `x_r y^{a_r} + y_r x^{b_r}`, then `x_i y_i`.
pub fn affine_closed_form(k: usize, a: &[Vec<i64>], b: &[Vec<i64>], x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let n = x.len();
    (0..n)
        .map(|i| {
            if i < k {
                &x[i] * mono(&y[k..], &a[i]) + &y[i] * mono(&x[k..], &b[i])
            } else {
                &x[i] * &y[i]
            }
        })
        .collect()
}

/// Closed-form product on the quadric cylinder in coordinates `x_i = χ^{q_i}`.
pub fn cylinder_closed_form(p: CylinderParams, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let CylinderParams { a1, b1, a2, b2, c1, d1, c2, d2 } = p;
    let (x1, x2, x3, x4, x5) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
    let (y1, y2, y3, y4, y5) = (&y[0], &y[1], &y[2], &y[3], &y[4]);
    let m = |u: &Rat, e: i64, v: &Rat, f: i64| pow(u, e) * pow(v, f);
    vec![
        x1 * m(y3, a1, y4, b1) + y1 * m(x3, a2, x4, b2),
        x2 * m(y3, c1, y4, d1) + y2 * m(x3, c2, x4, d2),
        x3 * y3,
        x4 * y4,
        x5 * m(y3, a1 + c1, y4, b1 + d1 - 1)
            + y5 * m(x3, a2 + c2, x4, b2 + d2 - 1)
            + x1 * m(x3, c2, x4, d2 - 1) * y2 * m(y3, a1, y4, b1 - 1)
            + y1 * m(y3, c1, y4, d1 - 1) * x2 * m(x3, a2, x4, b2 - 1),
    ]
}

pub fn cylinder(v: [i64; 8]) -> CylinderParams {
    CylinderParams::from_slice(&v).unwrap()
}

pub fn is_zero(v: &Rat) -> bool {
    v.is_zero()
}

/// Exponent vectors `a` and `b` of an affine-space preset.
pub type AffineParams = (Vec<Vec<i64>>, Vec<Vec<i64>>);

/// The first affine-space instance (non-active) and the second (active).
pub fn affine_instances() -> [AffineParams; 2] {
    [
        (vec![vec![0, 0], vec![1, 0]], vec![vec![1, 2], vec![3, 4]]),
        (vec![vec![0, 0], vec![1, 0]], vec![vec![1, 1], vec![3, 4]]),
    ]
}

/// Cylinder parameter choices used throughout: generic active, degenerate
/// first pair, fully commutative, a larger active one, and parallel differences.
pub fn cylinder_instances() -> Vec<CylinderParams> {
    vec![
        cylinder([0, 1, 1, 1, 0, 1, 2, 3]),
        cylinder([1, 2, 1, 2, 0, 1, 1, 3]),
        cylinder([0, 1, 0, 1, 0, 1, 0, 1]),
        cylinder([2, 1, 0, 3, 1, 2, 3, 1]),
        cylinder([0, 1, 1, 1, 0, 1, 2, 1]),
    ]
}
