//! Lower-bound configurations for axis-parallel boxes.
//!
//! Only coordinate orders matter for boxes, so clusters are short diagonal
//! segments on an integer grid with explicit tie-breaking: a cluster's
//! index is the least significant digit of both coordinates.

use std::f64::consts::PI;

use super::{labelled, positive, require_equal_clusters, GeneratorInstance, NamedWitness, Recipe};
use crate::error::{Error, Result};
use crate::exact;
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::oracle::Witness;

/// Direction of a cluster's segment.
#[derive(Debug, Clone, Copy)]
enum Slope {
    Up,
    Down,
}

/// Integer grid units per layout unit, per unit of segment offset.
const UNIT: i64 = 1000;
/// Clusters per layout stay below this, so the index fits one digit.
const DIGIT: i64 = 32;

/// `k` points per cluster, centred at the layout coordinates, spread over
/// `span` layout units along the cluster's slope.
fn diagonal_clusters(centers: &[(f64, f64, Slope)], k: usize, span: f64) -> Result<PointSet> {
    debug_assert!((centers.len() as i64) < DIGIT);
    let half = (k.max(2) - 1) as i64;
    let scale = UNIT * 2 * half;
    let step = (span * UNIT as f64).round() as i64;
    let mut pts = Vec::with_capacity(centers.len() * k);
    let mut labels = Vec::with_capacity(centers.len() * k);
    for (c, &(x, y, slope)) in centers.iter().enumerate() {
        let (cx, cy) = (
            (x * scale as f64).round() as i64,
            (y * scale as f64).round() as i64,
        );
        for j in 0..k as i64 {
            let t = (2 * j - (k as i64 - 1)) * step;
            let dy = match slope {
                Slope::Up => t,
                Slope::Down => -t,
            };
            pts.push(Point::from_ints(&[
                DIGIT * (cx + t) + c as i64,
                DIGIT * (cy + dy) + c as i64,
            ]));
            labels.push(c as u32);
        }
    }
    labelled(2, pts, labels)
}

fn instance(
    point_set: PointSet,
    dim: usize,
    net_size: usize,
    bound: (i64, i64),
    slack: usize,
    witnesses: Vec<NamedWitness>,
    recipe: Recipe,
) -> Result<GeneratorInstance> {
    GeneratorInstance {
        point_set,
        family: RangeFamily::Boxes(dim),
        net_size,
        weak: false,
        claimed_lower_bound: exact::frac(bound.0, bound.1),
        slack,
        witnesses,
        recipe,
    }
    .self_check()
}

/// `2d` clusters of `k` points at `+-e_a` for every axis `a`; one point
/// leaves `(2d - 1) / (2d)` of them in an avoiding box.
pub fn gen_box_lb(d: usize, k: usize) -> Result<GeneratorInstance> {
    positive("d", d)?;
    positive("k", k)?;
    let n = 2 * d * k;
    let far = 10 * (n * n) as i64;
    let mut pts = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for c in 0..2 * d {
        let sign = if c % 2 == 0 { 1 } else { -1 };
        for j in 0..k {
            let g = (c * k + j) as i64;
            let mut coords = vec![g; d];
            coords[c / 2] += sign * far;
            pts.push(Point::from_ints(&coords));
            labels.push(c as u32);
        }
    }
    let ps = labelled(d, pts, labels)?;
    require_equal_clusters(&ps, 2 * d, k)?;
    instance(
        ps,
        d,
        1,
        (2 * d as i64 - 1, 2 * d as i64),
        0,
        Vec::new(),
        Recipe::BoxLb { d, k },
    )
}

/// Three segments of `3k` points each; two points leave `5n/9`.
pub fn gen_rect2_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let m = 3 * k as i64;
    // Segment ends in layout units.
    let segments: [[i64; 4]; 3] = [[1, 4, 0, 3], [5, 4, 6, 3], [1, 2, 0, 2]];
    let f = 8 * m;
    let mut pts = Vec::new();
    let mut labels = Vec::new();
    for (s, &[x0, y0, x1, y1]) in segments.iter().enumerate() {
        let tie = s as i64 + 1;
        for j in 0..m {
            let odd = 2 * j + 1;
            let x = f * (2 * m * x0 + odd * (x1 - x0)) + tie * odd;
            let y = f * (2 * m * y0 + odd * (y1 - y0)) + tie * odd;
            pts.push(Point::from_ints(&[x, y]));
            labels.push(s as u32);
        }
    }
    let ps = labelled(2, pts, labels)?;
    require_equal_clusters(&ps, 3, 3 * k)?;
    instance(ps, 2, 2, (5, 9), 0, Vec::new(), Recipe::Rect2 { k })
}

/// Twenty clusters of `k` around a circle, five per quadrant; three points
/// leave eight consecutive clusters.
pub fn gen_rect3_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let centers: Vec<(f64, f64, Slope)> = (0..20)
        .map(|j| {
            let a = (9.0 + 18.0 * j as f64) * PI / 180.0;
            let (x, y) = (10.0 * a.cos(), 10.0 * a.sin());
            (x, y, if x * y <= 0.0 { Slope::Up } else { Slope::Down })
        })
        .collect();
    let ps = diagonal_clusters(&centers, k, 0.15)?;
    require_equal_clusters(&ps, 20, k)?;
    instance(ps, 2, 3, (2, 5), 0, Vec::new(), Recipe::Rect3 { k })
}

/// Ten clusters of `k`: a topmost, a bottommost and two quadrilaterals.
pub fn gen_rect4_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let up = Slope::Up;
    let centers = [
        (0.0, 10.0, up),
        (0.1, -10.0, up),
        (-2.0, 1.0, up),
        (-2.0, -1.0, up),
        (-3.0, 0.0, up),
        (-1.0, 0.0, up),
        (2.0, 1.0, up),
        (2.0, -1.0, up),
        (3.0, 0.0, up),
        (1.0, 0.0, up),
    ];
    let ps = diagonal_clusters(&centers, k, 0.15)?;
    require_equal_clusters(&ps, 10, k)?;
    instance(ps, 2, 4, (3, 10), 1, Vec::new(), Recipe::Rect4 { k })
}

/// Eight clusters of `k` in two square layers: an inner diamond and an
/// outer square.
pub fn gen_rect5_lb(k: usize) -> Result<GeneratorInstance> {
    positive("k", k)?;
    let (up, down) = (Slope::Up, Slope::Down);
    let centers = [
        (1.0, 0.0, up),
        (0.0, 1.0, up),
        (-1.0, 0.0, up),
        (0.0, -1.0, up),
        (2.0, 2.0, up),
        (-2.0, 2.0, down),
        (-2.0, -2.0, up),
        (2.0, -2.0, down),
    ];
    let ps = diagonal_clusters(&centers, k, 0.15)?;
    require_equal_clusters(&ps, 8, k)?;
    instance(ps, 2, 5, (1, 4), 0, Vec::new(), Recipe::Rect5 { k })
}

/// Radius of the sector circle in grid units.
const SECTOR_RADIUS: f64 = 1_000_000.0;
/// Rotation keeping coordinates distinct; any value off `pi * j / n` works.
const SECTOR_ROTATION: f64 = 0.1234;

/// `i * kk + 1` equally spaced points on a circle, with one pairwise
/// disjoint box per run of `kk` consecutive points.
pub fn gen_circle_sectors(i: usize, kk: usize) -> Result<GeneratorInstance> {
    if i < 4 {
        return Err(Error::InvalidParameter("circle sectors need i >= 4".into()));
    }
    positive("kk", kk)?;
    let n = i * kk + 1;
    let mut pts = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for m in 0..n {
        let a = 2.0 * PI * m as f64 / n as f64 + SECTOR_ROTATION;
        let x = (SECTOR_RADIUS * a.cos()).round() as i64;
        let y = (SECTOR_RADIUS * a.sin()).round() as i64;
        pts.push(Point::from_ints(&[x, y]));
        labels.push((m / kk).min(i) as u32);
    }
    let ps = labelled(2, pts, labels)?;
    let boxes: Vec<Witness> = (0..i)
        .map(|s| bounding_box(&ps.points()[s * kk..(s + 1) * kk]))
        .collect();
    for a in 0..i {
        for b in a + 1..i {
            if boxes_meet(&boxes[a], &boxes[b]) {
                return Err(Error::SelfCheck(format!(
                    "sector boxes {a} and {b} intersect"
                )));
            }
        }
    }
    let witnesses = boxes
        .into_iter()
        .enumerate()
        .map(|(s, witness)| NamedWitness {
            name: format!("sector-{s}"),
            witness,
            expected: kk,
        })
        .collect();
    instance(
        ps,
        2,
        i,
        (1, i as i64),
        0,
        witnesses,
        Recipe::CircleSectors { i, kk },
    )
}

fn bounding_box(pts: &[Point]) -> Witness {
    let d = pts[0].dim();
    let lo = (0..d)
        .map(|a| pts.iter().map(|p| &p.coords[a]).min().unwrap().clone())
        .collect();
    let hi = (0..d)
        .map(|a| pts.iter().map(|p| &p.coords[a]).max().unwrap().clone())
        .collect();
    Witness::Box { lo, hi }
}

fn boxes_meet(a: &Witness, b: &Witness) -> bool {
    match (a, b) {
        (Witness::Box { lo: l1, hi: h1 }, Witness::Box { lo: l2, hi: h2 }) => {
            (0..l1.len()).all(|c| l1[c] <= h2[c] && l2[c] <= h1[c])
        }
        _ => true,
    }
}
