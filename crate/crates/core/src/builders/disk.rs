//! Two-point strong net for disks from a centerpoint and the Delaunay
//! triangle containing it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact;
use crate::family::RangeFamily;
use crate::geom::delaunay::delaunay_indices;
use crate::geom::depth::{center_candidates, center_depth, depth_of_hpoint, HPoint};
use crate::geom::frame::Frame2;
use crate::geom::kernel::P2;
use crate::geom::{jitter, Point, PointSet, Triangle};
use crate::net::Net;

/// Seeds tried, in order, when the input is degenerate.
const JITTER_SEEDS: u64 = 8;

/// Everything the two-point disk construction decided.
#[derive(Debug, Clone)]
pub struct DiskNet2 {
    pub net: Net,
    /// The centerpoint, off every line through two input points.
    pub centerpoint: Point,
    /// The Delaunay triangle containing the centerpoint, counter-clockwise.
    pub triangle: Triangle,
    /// Segments from the other points to the centerpoint crossing edges
    /// `ab`, `bc` and `ca` of the triangle.
    pub crossings: [usize; 3],
    /// Seed of the order-preserving jitter applied first, if any.
    pub jitter_seed: Option<u64>,
    /// Whether the centerpoint was nudged off a degenerate depth region.
    pub nudged: bool,
}

fn general(pts: &[P2<BigInt>], h: &HPoint) -> bool {
    let n = pts.len();
    (0..n).all(|a| (a + 1..n).all(|b| pts[a] == pts[b] || h.side_of(&pts[a], &pts[b]) != 0))
}

fn collinear3(a: &HPoint, b: &HPoint, c: &HPoint) -> bool {
    let ab = [&b.x * &a.w - &a.x * &b.w, &b.y * &a.w - &a.y * &b.w];
    let ac = [&c.x * &a.w - &a.x * &c.w, &c.y * &a.w - &a.y * &c.w];
    &ab[0] * &ac[1] == &ab[1] * &ac[0]
}

/// A point of depth at least `ceil(n / 3)` off every line through two input
/// points; otherwise `Err` with the first point of that depth.
fn generic_centerpoint(pts: &[P2<BigInt>]) -> std::result::Result<HPoint, Option<HPoint>> {
    let k = center_depth(pts.len());
    let mut found: Vec<HPoint> = Vec::new();
    for h in center_candidates(pts).filter(|h| depth_of_hpoint(pts, h, k) >= k) {
        if general(pts, &h) {
            return Ok(h);
        }
        let spans = match found.len() {
            0 => true,
            1 => found[0] != h,
            _ => !collinear3(&found[0], &found[1], &h),
        };
        if spans {
            found.push(h);
        }
        if found.len() == 3 {
            break;
        }
    }
    if found.len() < 3 {
        return Err(found.into_iter().next());
    }
    // Depth-k points form a convex set; the curve (1, j, j^2) meets each
    // line at most twice.
    let refs: Vec<&HPoint> = found.iter().collect();
    (1..=curve_steps(pts))
        .map(|j| HPoint::combine(&refs, &[1, j, j * j]))
        .find(|h| general(pts, h))
        .ok_or_else(|| Some(found[0].clone()))
}

fn curve_steps(pts: &[P2<BigInt>]) -> u32 {
    (pts.len() * pts.len() + 2) as u32
}

/// Moves `p` into the interior of a triangle whose closure holds it, off
/// every line through two input points.
fn nudge(pts: &[P2<BigInt>], tris: &[Triangle], p: &HPoint) -> Option<(HPoint, Triangle)> {
    let corners = |t: &Triangle| t.vertices().map(|v| HPoint::from_int(&pts[v]));
    let tri = *tris.iter().find(|t| {
        let [a, b, c] = t.vertices();
        [(a, b), (b, c), (c, a)]
            .iter()
            .all(|&(u, v)| p.side_of(&pts[u], &pts[v]) >= 0)
    })?;
    let cs = corners(&tri);
    let refs: Vec<&HPoint> = cs.iter().collect();
    (1..=curve_steps(pts))
        .map(|j| {
            let inner = HPoint::combine(&refs, &[1, j, j * j]);
            HPoint::combine(&[p, &inner], &[1 << 20, 1])
        })
        .find(|h| general(pts, h))
        .map(|h| (h, tri))
}

struct Built {
    net: Net,
    centerpoint: Point,
    triangle: Triangle,
    crossings: [usize; 3],
    nudged: bool,
}

fn construct(ps: &PointSet) -> Result<Built> {
    let n = ps.len();
    let frame = Frame2::new(ps.points())?;
    let pts = frame.big();
    let tris = delaunay_indices(pts)?;
    let edges = |t: &Triangle| [(t.a, t.b), (t.b, t.c), (t.c, t.a)];
    let (p, tri, nudged) = match generic_centerpoint(pts) {
        Ok(p) => {
            let tri = *tris
                .iter()
                .find(|t| {
                    edges(t)
                        .iter()
                        .all(|&(u, v)| p.side_of(&pts[u], &pts[v]) > 0)
                })
                .ok_or_else(|| {
                    Error::Defect("centerpoint lies outside the triangulation".into())
                })?;
            (p, tri, false)
        }
        Err(first) => {
            let p = first.ok_or_else(|| {
                Error::Defect("no centerpoint candidate reached depth ceil(n/3)".into())
            })?;
            let (p, tri) = nudge(pts, &tris, &p)
                .ok_or_else(|| Error::Degenerate("cannot place the centerpoint".into()))?;
            (p, tri, true)
        }
    };
    let mut crossings = [0usize; 3];
    for q in (0..n).filter(|&q| !tri.contains_vertex(q)) {
        // The ray from p through q leaves through the edge whose cone holds q.
        let e = edges(&tri)
            .iter()
            .position(|&(u, v)| p.side_of(&pts[u], &pts[q]) > 0 && p.side_of(&pts[v], &pts[q]) < 0)
            .ok_or_else(|| Error::Defect("segment to the centerpoint crosses no edge".into()))?;
        crossings[e] += 1;
    }
    let best = (0..3).rev().max_by_key(|&e| crossings[e]).unwrap();
    if crossings[best] < (n - 3).div_ceil(3) {
        return Err(Error::Defect(
            "most crossed edge below a third of the segments".into(),
        ));
    }
    let (u, v) = edges(&tri)[best];
    let net = Net::strong(RangeFamily::Disks, vec![u, v], exact::frac(2, 3));
    Ok(Built {
        net,
        centerpoint: p.to_point(&frame),
        triangle: tri,
        crossings,
        nudged,
    })
}

fn finish(b: Built, jitter_seed: Option<u64>) -> DiskNet2 {
    DiskNet2 {
        net: b.net,
        centerpoint: b.centerpoint,
        triangle: b.triangle,
        crossings: b.crossings,
        jitter_seed,
        nudged: b.nudged,
    }
}

/// Two-point disk net with epsilon `2/3`, with its intermediate objects.
///
/// Cocircular quadruples are handled by an order-preserving jitter with the
/// first seed that works; the returned indices still refer to `ps`. If the
/// depth-`ceil(n/3)` region has empty interior, the centerpoint is nudged
/// into the interior of a Delaunay triangle whose closure contains it.
pub fn disk_net2_construction(ps: &PointSet) -> Result<DiskNet2> {
    ps.expect_dim(2)?;
    if ps.len() < 4 {
        return Err(Error::TooFewPoints {
            needed: 4,
            got: ps.len(),
        });
    }
    let mut err = match construct(ps) {
        Ok(b) => return Ok(finish(b, None)),
        Err(e @ (Error::Cocircular(..) | Error::Degenerate(_))) => e,
        Err(e) => return Err(e),
    };
    for seed in 1..=JITTER_SEEDS {
        match construct(&jitter(ps, seed)?) {
            Ok(b) => return Ok(finish(b, Some(seed))),
            Err(e) => err = e,
        }
    }
    Err(err)
}

/// Two-point disk net with epsilon `2/3`.
pub fn build_disk_net2(ps: &PointSet) -> Result<Net> {
    Ok(disk_net2_construction(ps)?.net)
}
