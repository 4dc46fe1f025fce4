//! Exact orientation and in-circle predicates.
//!
//! Each predicate first evaluates the determinant in plain floating point and
//! accepts the sign when it clears a forward error bound. Otherwise the
//! determinant is re-evaluated exactly with expansion arithmetic. Inputs whose
//! magnitudes could underflow or overflow an expansion (nonzero coordinates
//! outside `[2^-200, 2^120]`) are evaluated with big rationals instead.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::expansion::Expansion;
use super::point::Point2;
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON / 2.0;
const CCW_ERRBOUND: f64 = (3.0 + 16.0 * EPS) * EPS;
const ICC_ERRBOUND: f64 = (10.0 + 96.0 * EPS) * EPS;

const SAFE_MIN: f64 = 6.223_015_277_861_142e-61; // 2^-200
const SAFE_MAX: f64 = 1.329_227_995_784_916e36; // 2^120

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    fn from_sign(s: i8) -> Self {
        match s {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CirclePosition {
    Inside,
    Outside,
    Cocircular,
}

fn in_safe_range(pts: &[Point2]) -> bool {
    pts.iter().all(|p| {
        [p.x, p.y]
            .iter()
            .all(|&v| v == 0.0 || (SAFE_MIN..=SAFE_MAX).contains(&v.abs()))
    })
}

/// Orientation of the triple `(a, b, c)`.
pub fn orient2d(a: Point2, b: Point2, c: Point2) -> Orientation {
    Orientation::from_sign(orient2d_sign(a, b, c))
}

/// Position of `d` relative to the circle through `a`, `b`, `c`, which must be
/// in counter-clockwise order.
pub fn in_circumcircle(a: Point2, b: Point2, c: Point2, d: Point2) -> Result<CirclePosition> {
    if orient2d_sign(a, b, c) <= 0 {
        return Err(Error::NotCounterClockwise);
    }
    Ok(match incircle_sign(a, b, c, d) {
        1 => CirclePosition::Inside,
        -1 => CirclePosition::Outside,
        _ => CirclePosition::Cocircular,
    })
}

/// Sign of `(a - c) x (b - c)`: `1` for counter-clockwise.
pub(crate) fn orient2d_sign(a: Point2, b: Point2, c: Point2) -> i8 {
    if !in_safe_range(&[a, b, c]) {
        return orient2d_rational(a, b, c);
    }
    let left = (a.x - c.x) * (b.y - c.y);
    let right = (a.y - c.y) * (b.x - c.x);
    let det = left - right;
    let bound = CCW_ERRBOUND * (left.abs() + right.abs());
    if det > bound {
        1
    } else if -det > bound {
        -1
    } else {
        orient2d_exact(a, b, c)
    }
}

fn orient2d_exact(a: Point2, b: Point2, c: Point2) -> i8 {
    let acx = Expansion::diff(a.x, c.x);
    let bcx = Expansion::diff(b.x, c.x);
    let acy = Expansion::diff(a.y, c.y);
    let bcy = Expansion::diff(b.y, c.y);
    acx.mul(&bcy).sub(&acy.mul(&bcx)).signum()
}

/// Sign of the lifted determinant: `1` when `d` is strictly inside the circle
/// through `a, b, c` given that they are counter-clockwise.
pub(crate) fn incircle_sign(a: Point2, b: Point2, c: Point2, d: Point2) -> i8 {
    if !in_safe_range(&[a, b, c, d]) {
        return incircle_rational(a, b, c, d);
    }
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);

    let bdxcdy = bdx * cdy;
    let cdxbdy = cdx * bdy;
    let alift = adx * adx + ady * ady;
    let cdxady = cdx * ady;
    let adxcdy = adx * cdy;
    let blift = bdx * bdx + bdy * bdy;
    let adxbdy = adx * bdy;
    let bdxady = bdx * ady;
    let clift = cdx * cdx + cdy * cdy;

    let det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    let permanent = (bdxcdy.abs() + cdxbdy.abs()) * alift
        + (cdxady.abs() + adxcdy.abs()) * blift
        + (adxbdy.abs() + bdxady.abs()) * clift;
    let bound = ICC_ERRBOUND * permanent;
    if det > bound {
        1
    } else if -det > bound {
        -1
    } else {
        incircle_exact(a, b, c, d)
    }
}

fn incircle_exact(a: Point2, b: Point2, c: Point2, d: Point2) -> i8 {
    let adx = Expansion::diff(a.x, d.x);
    let ady = Expansion::diff(a.y, d.y);
    let bdx = Expansion::diff(b.x, d.x);
    let bdy = Expansion::diff(b.y, d.y);
    let cdx = Expansion::diff(c.x, d.x);
    let cdy = Expansion::diff(c.y, d.y);

    let alift = adx.mul(&adx).add(&ady.mul(&ady));
    let blift = bdx.mul(&bdx).add(&bdy.mul(&bdy));
    let clift = cdx.mul(&cdx).add(&cdy.mul(&cdy));

    let bc = bdx.mul(&cdy).sub(&cdx.mul(&bdy));
    let ca = cdx.mul(&ady).sub(&adx.mul(&cdy));
    let ab = adx.mul(&bdy).sub(&bdx.mul(&ady));

    alift
        .mul(&bc)
        .add(&blift.mul(&ca))
        .add(&clift.mul(&ab))
        .signum()
}

fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite coordinate")
}

fn sign_of(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn orient2d_rational(a: Point2, b: Point2, c: Point2) -> i8 {
    let acx = rational(a.x) - rational(c.x);
    let bcx = rational(b.x) - rational(c.x);
    let acy = rational(a.y) - rational(c.y);
    let bcy = rational(b.y) - rational(c.y);
    sign_of(&(acx * bcy - acy * bcx))
}

fn incircle_rational(a: Point2, b: Point2, c: Point2, d: Point2) -> i8 {
    let (dx, dy) = (rational(d.x), rational(d.y));
    let rel = |p: Point2| (rational(p.x) - &dx, rational(p.y) - &dy);
    let (adx, ady) = rel(a);
    let (bdx, bdy) = rel(b);
    let (cdx, cdy) = rel(c);
    let alift = &adx * &adx + &ady * &ady;
    let blift = &bdx * &bdx + &bdy * &bdy;
    let clift = &cdx * &cdx + &cdy * &cdy;
    let det = alift * (&bdx * &cdy - &cdx * &bdy)
        + blift * (&cdx * &ady - &adx * &cdy)
        + clift * (&adx * &bdy - &bdx * &ady);
    sign_of(&det)
}

/// In-circle test with symbolic perturbation: exact zeros are resolved as if
/// each point's lifted coordinate `x^2 + y^2` carried an infinitesimal offset
/// whose magnitude decreases with vertex id, so lower ids dominate. The
/// result is never zero when `a, b, c` are counter-clockwise.
///
/// The offset on a vertex contributes its cofactor in the lifted `4x4`
/// determinant, which is a signed orientation of the other three points.
pub(crate) fn incircle_perturbed(pts: &[Point2], ids: [usize; 4]) -> i8 {
    let [a, b, c, d] = ids.map(|i| pts[i]);
    let s = incircle_sign(a, b, c, d);
    if s != 0 {
        return s;
    }
    let mut order = [0usize, 1, 2, 3];
    order.sort_by_key(|&slot| ids[slot]);
    for slot in order {
        let cofactor = match slot {
            0 => orient2d_sign(b, c, d),
            1 => -orient2d_sign(a, c, d),
            2 => orient2d_sign(a, b, d),
            _ => -orient2d_sign(a, b, c),
        };
        if cofactor != 0 {
            return cofactor;
        }
    }
    0
}
