//! Weak-net lower bound for disks: six clusters on two concentric circles.

use std::f64::consts::PI;

use super::{labelled, positive, require_equal_clusters, GeneratorInstance, NamedWitness, Recipe};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::oracle::Witness;

const OUTER: f64 = 2.5;
const INNER: f64 = 1.0;
const SCALE: f64 = 1000.0;
/// Angle between consecutive points of a cluster, in radians.
const SPREAD: f64 = 0.02;

/// Clusters in angular order from the top: even labels on the outer circle.
fn cluster_angle(c: usize) -> f64 {
    (90.0 + 60.0 * c as f64) * PI / 180.0
}

fn members(ps: &PointSet, clusters: &[u32]) -> Vec<Point> {
    let labels = ps.labels().unwrap();
    (0..ps.len())
        .filter(|&p| clusters.contains(&labels[p]))
        .map(|p| ps.point(p).clone())
        .collect()
}

fn centroid(pts: &[Point]) -> Point {
    let n = exact::int(pts.len() as i64);
    let sx: Rational = pts.iter().map(|p| p.x().clone()).sum();
    let sy: Rational = pts.iter().map(|p| p.y().clone()).sum();
    Point::xy(sx / &n, sy / n)
}

fn sq_dist(a: &Point, b: &Point) -> Rational {
    let dx = a.x() - b.x();
    let dy = a.y() - b.y();
    &dx * &dx + &dy * &dy
}

/// Smallest disk around `centroid * t / 4` holding `pts`.
fn disk_around(pts: &[Point], t: i64) -> Witness {
    let c = centroid(pts);
    let f = exact::frac(t, 4);
    let center = Point::xy(c.x() * &f, c.y() * &f);
    let radius_sq = pts.iter().map(|p| sq_dist(p, &center)).max().unwrap();
    Witness::Disk { center, radius_sq }
}

/// Halfplane of points at least as far along the members' centroid
/// direction as every member.
fn halfplane_along(pts: &[Point]) -> Witness {
    let c = centroid(pts);
    let low = pts
        .iter()
        .map(|p| p.x() * c.x() + p.y() * c.y())
        .min()
        .unwrap();
    Witness::Halfplane {
        a: -c.x().clone(),
        b: -c.y().clone(),
        c: -low,
    }
}

/// Six clusters of `k` points; any three points leave a disk with a third
/// of them.
pub fn gen_disk_weak3_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let mut pts = Vec::with_capacity(6 * k);
    let mut labels = Vec::with_capacity(6 * k);
    for c in 0..6 {
        let r = if c % 2 == 0 { OUTER } else { INNER };
        for j in 0..k {
            let a = cluster_angle(c) + (j as f64 - (k as f64 - 1.0) / 2.0) * SPREAD;
            let x = (r * a.cos() * SCALE).round() as i64;
            let y = (r * a.sin() * SCALE).round() as i64;
            pts.push(Point::from_ints(&[x, y]));
            labels.push(c as u32);
        }
    }
    let ps = labelled(2, pts, labels)?;
    require_equal_clusters(&ps, 6, k)?;
    check_radii(&ps)?;

    let expected = 2 * k;
    let held = |w: &Witness| w.count_in(ps.points()) == expected;
    let d1 = members(&ps, &[0, 5]);
    // Alternative placements for the second disk on the first pair.
    let moved = [5, 6, 3, 7, 2]
        .into_iter()
        .map(|t| disk_around(&d1, t))
        .find(|w| held(w))
        .ok_or_else(|| Error::SelfCheck("no second disk isolates the first pair".into()))?;
    let witnesses = vec![
        ("D1", disk_around(&d1, 4)),
        ("D2", disk_around(&members(&ps, &[2, 1]), 4)),
        ("D3", disk_around(&members(&ps, &[4, 3]), 4)),
        ("D1'", moved),
        ("H12", halfplane_along(&members(&ps, &[0, 1]))),
        ("H23", halfplane_along(&members(&ps, &[2, 3]))),
    ];
    let witnesses = witnesses
        .into_iter()
        .map(|(name, witness)| NamedWitness {
            name: name.into(),
            witness,
            expected,
        })
        .collect();
    GeneratorInstance {
        point_set: ps,
        family: RangeFamily::Disks,
        net_size: 3,
        weak: true,
        claimed_lower_bound: exact::frac(1, 3),
        slack: 0,
        witnesses,
        recipe: Recipe::DiskWeak3 { k },
    }
    .self_check()
}

/// Every outer point is more than twice as far from the centre as every
/// inner point.
fn check_radii(ps: &PointSet) -> Result<()> {
    let labels = ps.labels().unwrap();
    let origin = Point::from_ints(&[0, 0]);
    let norms = |outer: bool| {
        (0..ps.len())
            .filter(move |&p| (labels[p].is_multiple_of(2)) == outer)
            .map(|p| sq_dist(ps.point(p), &origin))
    };
    let inner_max = norms(false).max().unwrap();
    let outer_min = norms(true).min().unwrap();
    if outer_min <= inner_max * exact::int(4) {
        return Err(Error::SelfCheck(
            "outer circle not beyond twice the inner radius".into(),
        ));
    }
    Ok(())
}
