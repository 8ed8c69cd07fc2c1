//! Halfplane (Tukey) depth and planar centerpoints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::frame::Frame2;
use super::kernel::{cross, dot, Exact, P2};
use super::point::{Point, PointSet};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::with_coords;

/// A point `(x / w, y / w)` of an integer frame, with `w > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct HPoint {
    pub x: BigInt,
    pub y: BigInt,
    pub w: BigInt,
}

impl HPoint {
    pub fn from_int(p: &P2<BigInt>) -> Self {
        HPoint {
            x: p[0].clone(),
            y: p[1].clone(),
            w: BigInt::from(1),
        }
    }

    /// `w * (p - self)`, a positive multiple of the vector from self to `p`.
    pub fn vector_to(&self, p: &P2<BigInt>) -> P2<BigInt> {
        [&p[0] * &self.w - &self.x, &p[1] * &self.w - &self.y]
    }

    /// Sign of `orient(a, b, self)`.
    pub fn side_of(&self, a: &P2<BigInt>, b: &P2<BigInt>) -> i8 {
        let ab = [&b[0] - &a[0], &b[1] - &a[1]];
        let ah = [&self.x - &a[0] * &self.w, &self.y - &a[1] * &self.w];
        let c = cross(&ab, &ah);
        if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn to_point(&self, frame: &Frame2) -> Point {
        let w = Rational::from_integer(self.w.clone());
        let x = Rational::from_integer(self.x.clone()) / &w;
        let y = Rational::from_integer(self.y.clone()) / &w;
        Point::xy(frame.unmap(&x, 0), frame.unmap(&y, 1))
    }

    /// Weighted combination `sum(weights[i] * pts[i]) / sum(weights)`.
    pub fn combine(pts: &[&HPoint], weights: &[u32]) -> HPoint {
        let common: BigInt = pts.iter().map(|p| p.w.clone()).product();
        let total: u32 = weights.iter().sum();
        let mut x = BigInt::zero();
        let mut y = BigInt::zero();
        for (p, &wt) in pts.iter().zip(weights) {
            let factor = &common / &p.w * BigInt::from(wt);
            x += &p.x * &factor;
            y += &p.y * &factor;
        }
        HPoint {
            x,
            y,
            w: common * BigInt::from(total),
        }
    }
}

/// Minimum number of points in a closed halfplane whose boundary passes
/// through the origin, where `vs` are the points relative to the query.
/// Stops early once the running minimum drops below `stop_below`.
pub(crate) fn depth_from_vectors<T: Exact>(vs: &[P2<T>], stop_below: usize) -> usize {
    let at_query = vs
        .iter()
        .filter(|v| v[0].is_zero() && v[1].is_zero())
        .count();
    let others: Vec<&P2<T>> = vs
        .iter()
        .filter(|v| !(v[0].is_zero() && v[1].is_zero()))
        .collect();
    if others.is_empty() {
        return at_query;
    }
    let mut best = usize::MAX;
    for v in &others {
        let neg = [-v[0].clone(), -v[1].clone()];
        for dir in [(*v).clone(), neg] {
            let (mut left, mut fwd, mut bwd) = (0usize, 0usize, 0usize);
            for w in &others {
                let c = cross(&dir, w);
                if c.is_positive() {
                    left += 1;
                } else if c.is_zero() {
                    if dot(&dir, w).is_positive() {
                        fwd += 1;
                    } else {
                        bwd += 1;
                    }
                }
            }
            // Rotating the boundary slightly counter-clockwise sends the
            // backward ray to the left side, clockwise sends the forward ray.
            best = best.min(at_query + left + bwd.min(fwd));
            if best < stop_below {
                return best;
            }
        }
    }
    best
}

/// Minimum over all closed halfplanes containing `x` of the number of points
/// of `ps` they contain.
#[allow(clippy::op_ref)]
pub fn halfplane_depth(ps: &PointSet, x: &Point) -> Result<usize> {
    ps.expect_dim(2)?;
    x.expect_dim(2)?;
    let frame = Frame2::new(ps.points().iter().chain(std::iter::once(x)))?;
    let n = ps.len();
    Ok(with_coords!(frame, |c| {
        let q = &c[n];
        let vs: Vec<_> = c[..n]
            .iter()
            .map(|p| [&p[0] - &q[0], &p[1] - &q[1]])
            .collect();
        depth_from_vectors(&vs, 0)
    }))
}

pub(crate) fn depth_of_hpoint(pts: &[P2<BigInt>], h: &HPoint, stop_below: usize) -> usize {
    let vs: Vec<P2<BigInt>> = pts.iter().map(|p| h.vector_to(p)).collect();
    depth_from_vectors(&vs, stop_below)
}

/// Required centerpoint depth `ceil(n / 3)`.
pub fn center_depth(n: usize) -> usize {
    n.div_ceil(3)
}

/// Centerpoint candidates in construction order: the input points, then the
/// intersections of lines through disjoint pairs of input points.
pub(crate) fn center_candidates(pts: &[P2<BigInt>]) -> impl Iterator<Item = HPoint> + '_ {
    let n = pts.len();
    let mut lines = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if pts[a] != pts[b] {
                lines.push((a, b));
            }
        }
    }
    let lines = std::rc::Rc::new(lines);
    let count = lines.len();
    let own = pts.iter().map(HPoint::from_int);
    let crossings = (0..count)
        .flat_map(move |l1| (l1 + 1..count).map(move |l2| (l1, l2)))
        .filter_map(move |(l1, l2)| {
            let (a, b) = lines[l1];
            let (c, d) = lines[l2];
            if a == c || a == d || b == c || b == d {
                return None;
            }
            let ab = [&pts[b][0] - &pts[a][0], &pts[b][1] - &pts[a][1]];
            let cd = [&pts[d][0] - &pts[c][0], &pts[d][1] - &pts[c][1]];
            let mut w = cross(&ab, &cd);
            if w.is_zero() {
                return None;
            }
            let ac = [&pts[c][0] - &pts[a][0], &pts[c][1] - &pts[a][1]];
            let t = cross(&ac, &cd);
            let mut x = &pts[a][0] * &w + &ab[0] * &t;
            let mut y = &pts[a][1] * &w + &ab[1] * &t;
            if w.is_negative() {
                w = -w;
                x = -x;
                y = -y;
            }
            Some(HPoint { x, y, w })
        });
    own.chain(crossings)
}

/// A point of depth at least `ceil(n / 3)`: the first qualifying candidate
/// among the input points and the pairwise line intersections.
pub fn centerpoint2d(ps: &PointSet) -> Result<Point> {
    ps.expect_dim(2)?;
    let frame = Frame2::new(ps.points())?;
    let pts = frame.big();
    let k = center_depth(ps.len());
    let found = center_candidates(pts).find(|h| depth_of_hpoint(pts, h, k) >= k);
    found
        .map(|h| h.to_point(&frame))
        .ok_or_else(|| Error::Defect("no centerpoint candidate reached depth ceil(n/3)".into()))
}
