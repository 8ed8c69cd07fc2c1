use super::frame::Frame2;
use super::kernel::{in_circle, orient, sign, Exact, P2};
use super::point::{PointSet, Triangle};
use crate::error::{Error, Result};
use crate::with_coords;

/// Delaunay triangulation by exhaustive empty-circumcircle search.
///
/// A triple is kept iff no other point lies strictly inside its circumcircle.
/// A kept triple with a fourth point on its circle makes the triangulation
/// ambiguous and is reported as [`Error::Cocircular`].
pub fn delaunay(ps: &PointSet) -> Result<Vec<Triangle>> {
    ps.expect_dim(2)?;
    if ps.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: ps.len(),
        });
    }
    let frame = Frame2::new(ps.points())?;
    with_coords!(frame, |c| delaunay_indices(c))
}

pub(crate) fn delaunay_indices<T: Exact>(pts: &[P2<T>]) -> Result<Vec<Triangle>> {
    let n = pts.len();
    let mut tris = Vec::new();
    let mut any_proper = false;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let o = orient(&pts[i], &pts[j], &pts[k]);
                if o.is_zero() {
                    continue;
                }
                any_proper = true;
                let (a, b, c) = if o.is_positive() {
                    (i, j, k)
                } else {
                    (i, k, j)
                };
                let mut cocircular = None;
                let mut empty = true;
                for q in 0..n {
                    if q == i || q == j || q == k {
                        continue;
                    }
                    match sign(&in_circle(&pts[a], &pts[b], &pts[c], &pts[q])) {
                        1 => {
                            empty = false;
                            break;
                        }
                        0 => {
                            if pts[q] == pts[a] || pts[q] == pts[b] || pts[q] == pts[c] {
                                return Err(Error::Degenerate(format!(
                                    "points {q} and a vertex of ({a},{b},{c}) coincide"
                                )));
                            }
                            cocircular.get_or_insert(q);
                        }
                        _ => {}
                    }
                }
                if !empty {
                    continue;
                }
                if let Some(q) = cocircular {
                    return Err(Error::Cocircular(a, b, c, q));
                }
                tris.push(Triangle { a, b, c });
            }
        }
    }
    if !any_proper {
        return Err(Error::Collinear);
    }
    Ok(tris)
}
