//! Lower-bound configurations for halfplanes.

use std::f64::consts::PI;

use super::{labelled, positive, require_equal_clusters, snap, GeneratorInstance, Recipe};
use crate::error::{Error, Result};
use crate::exact;
use crate::family::RangeFamily;
use crate::geom::Point;
use crate::net::Net;
use crate::oracle::max_halfplane_avoiding;

const SCALE: f64 = 1_000_000.0;

/// Clusters of `2k` points at the vertices of a regular polygon, each on a
/// short arc bulging toward the polygon's centre.
///
/// Odd `i` uses `(i + 1) / 2` clusters with bound `2 / (i + 1)`; even `i`
/// reuses the construction for `i + 1`.
pub fn gen_halfspace_lb(i: usize, k: usize) -> Result<GeneratorInstance> {
    positive("i", i)?;
    positive("k", k)?;
    let odd = if i % 2 == 1 { i } else { i + 1 };
    let clusters = odd.div_ceil(2);
    let m = 2 * k;
    let rho = 0.5;
    let mut pts = Vec::with_capacity(clusters * m);
    let mut labels = Vec::with_capacity(clusters * m);
    for c in 0..clusters {
        let a = 2.0 * PI * c as f64 / clusters as f64 + PI / 2.0;
        let (ux, uy) = (a.cos(), a.sin());
        // The arc's circle touches the polygon's circumcircle from outside.
        let (cx, cy) = ((1.0 + rho) * ux, (1.0 + rho) * uy);
        for j in 0..m {
            let t = if m == 1 {
                0.0
            } else {
                (j as f64 / (m - 1) as f64 - 0.5) * 0.8
            };
            let b = a + PI + t;
            pts.push(snap(cx + rho * b.cos(), cy + rho * b.sin(), SCALE));
            labels.push(c as u32);
        }
    }
    let ps = labelled(2, pts, labels)?;
    require_equal_clusters(&ps, clusters, m)?;
    // Each cluster is cut off by a halfplane missing every other cluster.
    let all_labels = ps.labels().unwrap().to_vec();
    for c in 0..clusters {
        let others: Vec<usize> = (0..ps.len())
            .filter(|&p| all_labels[p] != c as u32)
            .collect();
        let r = max_halfplane_avoiding(
            &ps,
            &Net::strong(RangeFamily::Halfplanes, others, exact::int(0)),
        )?;
        if r.max_count < m {
            return Err(Error::SelfCheck(format!(
                "cluster {c} is not isolable by a halfplane"
            )));
        }
    }
    GeneratorInstance {
        point_set: ps,
        family: RangeFamily::Halfplanes,
        net_size: i,
        weak: false,
        claimed_lower_bound: exact::frac(2, odd as i64 + 1),
        slack: 1,
        witnesses: Vec::new(),
        recipe: Recipe::Halfspace { i, k },
    }
    .self_check()
}

/// `3k` points on an arc of the upper half of a circle and `2k` points far
/// above it; every tangent at an arc point separates the rest of the arc
/// from the far cluster.
pub fn gen_halfspace2_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let (s, t) = (3 * k, 2 * k);
    let mut pts = Vec::with_capacity(s + t);
    let mut labels = Vec::with_capacity(s + t);
    for j in 0..s {
        let a = (30.0 + 120.0 * (j as f64 + 0.5) / s as f64) * PI / 180.0;
        pts.push(snap(a.cos(), a.sin(), SCALE));
        labels.push(0);
    }
    for j in 0..t {
        // A short convex arc around (0, 4).
        let a = (80.0 + 20.0 * (j as f64 + 0.5) / t as f64) * PI / 180.0;
        pts.push(snap(0.2 * a.cos(), 3.8 + 0.2 * a.sin(), SCALE));
        labels.push(1);
    }
    let ps = labelled(2, pts, labels)?;
    let arc = &ps.points()[..s];
    let far = &ps.points()[s..];
    let dot = |p: &Point, q: &Point| p.x() * q.x() + p.y() * q.y();
    for p in arc {
        let pp = dot(p, p);
        let inside = arc.iter().filter(|q| *q != p).all(|q| dot(q, p) < pp);
        let beyond = far.iter().all(|q| dot(q, p) > pp);
        if !inside || !beyond {
            return Err(Error::SelfCheck(
                "a tangent fails to separate the arc from the far cluster".into(),
            ));
        }
    }
    GeneratorInstance {
        point_set: ps,
        family: RangeFamily::Halfplanes,
        net_size: 2,
        weak: false,
        claimed_lower_bound: exact::frac(3, 5),
        slack: 1,
        witnesses: Vec::new(),
        recipe: Recipe::Halfspace2 { k },
    }
    .self_check()
}
