//! Sign-exact predicates over integer-like scalars.
//!
//! Every routine here is generic over [`Exact`], implemented by `i128` (for
//! frames whose coordinate range keeps all intermediate products in range)
//! and `BigInt` (everything else). Callers pick the representation through
//! [`crate::geom::frame`].

use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::{Num, Signed};

pub trait Exact: Clone + Ord + Num + Signed + Debug + Send + Sync {}
impl<T: Clone + Ord + Num + Signed + Debug + Send + Sync> Exact for T {}

pub type P2<T> = [T; 2];

#[inline]
pub fn sub<T: Exact>(a: &P2<T>, b: &P2<T>) -> P2<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
}

#[inline]
pub fn cross<T: Exact>(u: &P2<T>, v: &P2<T>) -> T {
    u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone()
}

#[inline]
pub fn dot<T: Exact>(u: &P2<T>, v: &P2<T>) -> T {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone()
}

/// Twice the signed area of `(a, b, c)`; positive when counter-clockwise.
#[inline]
pub fn orient<T: Exact>(a: &P2<T>, b: &P2<T>, c: &P2<T>) -> T {
    cross(&sub(b, a), &sub(c, a))
}

#[inline]
pub fn orient_sign<T: Exact>(a: &P2<T>, b: &P2<T>, c: &P2<T>) -> i8 {
    sign(&orient(a, b, c))
}

/// In-circle determinant; positive iff `d` is strictly inside the circle
/// through `a, b, c` when those are counter-clockwise.
pub fn in_circle<T: Exact>(a: &P2<T>, b: &P2<T>, c: &P2<T>, d: &P2<T>) -> T {
    let ad = sub(a, d);
    let bd = sub(b, d);
    let cd = sub(c, d);
    let la = dot(&ad, &ad);
    let lb = dot(&bd, &bd);
    let lc = dot(&cd, &cd);
    la * cross(&bd, &cd) - lb * cross(&ad, &cd) + lc * cross(&ad, &bd)
}

#[inline]
pub fn sign<T: Exact>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Lexicographic comparison used for sorting points.
pub fn lex_cmp<T: Exact>(a: &P2<T>, b: &P2<T>) -> Ordering {
    a[0].cmp(&b[0]).then_with(|| a[1].cmp(&b[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(p: [i64; 2]) -> P2<BigInt> {
        [BigInt::from(p[0]), BigInt::from(p[1])]
    }

    #[test]
    fn small_and_big_agree() {
        let pts = [[0i64, 0], [7, 1], [3, 9], [4, 4], [-2, 5]];
        for a in pts {
            for b in pts {
                for c in pts {
                    let s = orient_sign(
                        &[a[0] as i128, a[1] as i128],
                        &[b[0] as i128, b[1] as i128],
                        &[c[0] as i128, c[1] as i128],
                    );
                    assert_eq!(s, orient_sign(&big(a), &big(b), &big(c)));
                    for d in pts {
                        let small = in_circle(
                            &[a[0] as i128, a[1] as i128],
                            &[b[0] as i128, b[1] as i128],
                            &[c[0] as i128, c[1] as i128],
                            &[d[0] as i128, d[1] as i128],
                        );
                        let large = in_circle(&big(a), &big(b), &big(c), &big(d));
                        assert_eq!(sign(&small), sign(&large));
                    }
                }
            }
        }
    }
}
