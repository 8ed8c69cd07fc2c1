use super::frame::Frame2;
use super::kernel::{lex_cmp, orient, Exact, P2};
use super::point::PointSet;
use crate::error::Result;
use crate::with_coords;

/// Convex hull vertices in clockwise order.
///
/// Points in the relative interior of hull edges are dropped. If every point
/// is collinear the two extreme points are returned (one if all coincide).
pub fn convex_hull(ps: &PointSet) -> Result<Vec<usize>> {
    ps.expect_dim(2)?;
    let frame = Frame2::new(ps.points())?;
    Ok(with_coords!(frame, |c| hull_indices(c)))
}

pub(crate) fn hull_indices<T: Exact>(pts: &[P2<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| lex_cmp(&pts[a], &pts[b]).then(a.cmp(&b)));
    order.dedup_by(|a, b| pts[*a] == pts[*b]);
    if order.len() <= 2 {
        return order;
    }
    // Monotone chain producing the clockwise upper hull then lower hull.
    let mut upper: Vec<usize> = Vec::new();
    for &i in &order {
        while upper.len() >= 2 {
            let o = orient(
                &pts[upper[upper.len() - 2]],
                &pts[upper[upper.len() - 1]],
                &pts[i],
            );
            if o.is_positive() || o.is_zero() {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(i);
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while lower.len() >= 2 {
            let o = orient(
                &pts[lower[lower.len() - 2]],
                &pts[lower[lower.len() - 1]],
                &pts[i],
            );
            if o.is_positive() || o.is_zero() {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(i);
    }
    upper.pop();
    lower.pop();
    upper.extend(lower);
    if upper.len() == 2 && upper[0] == upper[1] {
        upper.pop();
    }
    upper
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::predicates::orient2d;

    #[test]
    fn square_with_center() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[2, 0], &[2, 2], &[0, 2], &[1, 1]]).unwrap();
        let h = convex_hull(&ps).unwrap();
        let mut sorted = h.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
        // clockwise: every consecutive triple turns right
        for k in 0..h.len() {
            let (a, b, c) = (h[k], h[(k + 1) % h.len()], h[(k + 2) % h.len()]);
            assert_eq!(orient2d(ps.point(a), ps.point(b), ps.point(c)).unwrap(), -1);
        }
    }

    #[test]
    fn collinear_gives_extremes() {
        let ps = PointSet::from_ints(2, &[&[1, 1], &[0, 0], &[2, 2]]).unwrap();
        let mut h = convex_hull(&ps).unwrap();
        h.sort();
        assert_eq!(h, vec![1, 2]);
    }

    #[test]
    fn edge_interior_points_excluded() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[2, 0], &[1, 2]]).unwrap();
        let mut h = convex_hull(&ps).unwrap();
        h.sort();
        assert_eq!(h, vec![0, 2, 3]);
    }

    #[test]
    fn single_and_coincident() {
        let ps = PointSet::from_ints(2, &[&[3, 3]]).unwrap();
        assert_eq!(convex_hull(&ps).unwrap(), vec![0]);
        let ps = PointSet::from_ints(2, &[&[3, 3], &[3, 3]]).unwrap();
        assert_eq!(convex_hull(&ps).unwrap().len(), 1);
    }
}
