use super::point::Point;
use crate::error::{Error, Result};
use crate::exact::Rational;
use num_traits::Signed;

fn sign_of(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn d(a: &Point, b: &Point) -> [Rational; 2] {
    [&a.coords[0] - &b.coords[0], &a.coords[1] - &b.coords[1]]
}

/// Orientation of `(a, b, c)`: `+1` counter-clockwise, `-1` clockwise, `0` collinear.
pub fn orient2d(a: &Point, b: &Point, c: &Point) -> Result<i8> {
    for p in [a, b, c] {
        p.expect_dim(2)?;
    }
    let u = d(b, a);
    let v = d(c, a);
    Ok(sign_of(&(&u[0] * &v[1] - &u[1] * &v[0])))
}

/// `+1` iff `d` is strictly inside the circumcircle of the counter-clockwise
/// triangle `(a, b, c)`, `0` on it, `-1` outside.
pub fn in_circle(a: &Point, b: &Point, c: &Point, d_: &Point) -> Result<i8> {
    d_.expect_dim(2)?;
    match orient2d(a, b, c)? {
        0 => return Err(Error::Collinear),
        -1 => {
            return Err(Error::InvalidParameter(
                "in_circle expects a counter-clockwise triangle".into(),
            ))
        }
        _ => {}
    }
    let ad = d(a, d_);
    let bd = d(b, d_);
    let cd = d(c, d_);
    let lift = |v: &[Rational; 2]| &v[0] * &v[0] + &v[1] * &v[1];
    let cr = |u: &[Rational; 2], v: &[Rational; 2]| &u[0] * &v[1] - &u[1] * &v[0];
    let det = lift(&ad) * cr(&bd, &cd) - lift(&bd) * cr(&ad, &cd) + lift(&cd) * cr(&ad, &bd);
    Ok(sign_of(&det))
}
