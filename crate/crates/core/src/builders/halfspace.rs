//! Strong nets for halfplanes by walking the convex hull.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact;
use crate::family::RangeFamily;
use crate::geom::frame::Frame2;
use crate::geom::hull::hull_indices;
use crate::geom::kernel::{orient_sign, P2};
use crate::geom::PointSet;
use crate::net::Net;
use crate::oracle::verify::{verify_lower_bound_with_budget, Mode, DEFAULT_BUDGET};
use crate::oracle::{Adversary, HalfplaneAdversary};

/// Points in the closed halfplane bounded by line `(a, b)` on the side of `c`.
fn side_count(pts: &[P2<BigInt>], a: usize, b: usize, c: usize) -> usize {
    let s = orient_sign(&pts[a], &pts[b], &pts[c]);
    if s == 0 {
        return 0;
    }
    pts.iter()
        .filter(|p| orient_sign(&pts[a], &pts[b], p) * s >= 0)
        .count()
}

/// Hull vertices picked by the clockwise walk, as positions on the hull.
fn walk(pts: &[P2<BigInt>], hull: &[usize], limit: usize) -> Vec<usize> {
    let m = hull.len();
    let c = |k: usize| hull[k % m];
    let mut picked = vec![0];
    let mut x = 0;
    loop {
        let next = (x + 1..x + m).find(|&z| side_count(pts, c(x), c(z + 1), c(z)) > limit);
        match next {
            Some(z) if z < m => {
                picked.push(z);
                x = z;
            }
            Some(z) => {
                // Wrapped past the start: the last pick may duplicate or
                // cover earlier ones, which the pruning pass removes.
                if z % m != 0 && !picked.contains(&(z % m)) {
                    picked.push(z % m);
                }
                break;
            }
            None => break,
        }
    }
    picked
}

/// A halfplane net of size at most `i` with epsilon `2 / (i + 1)`.
///
/// After the walk, members are dropped greedily (first, last, then in walk
/// order) while every avoiding halfplane still holds at most
/// `floor(2n / (i + 1))` points. Points on the boundary of several walk
/// halfplanes can leave more than `i` members; the walk is then restarted
/// from the next hull vertex, and if every start fails the best `i`-point
/// net is found exhaustively. A collinear input yields its two extreme
/// points (one if `i = 1`) with the exact epsilon claimed instead.
pub fn build_halfspace_net(ps: &PointSet, i: usize) -> Result<Net> {
    ps.expect_dim(2)?;
    if i == 0 {
        return Err(Error::InvalidParameter("net size must be positive".into()));
    }
    let n = ps.len();
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: n });
    }
    let frame = Frame2::new(ps.points())?;
    let pts = frame.big();
    let hull = hull_indices(pts);
    let adv = HalfplaneAdversary::new(ps, &[])?;
    let heaviest = |net: &[usize], stop_at: usize| {
        let mut blocked = vec![false; n];
        net.iter().for_each(|&k| blocked[k] = true);
        adv.solve(&blocked, stop_at, &mut 0).count
    };
    if hull.len() <= 2 {
        let mut idx = hull;
        idx.truncate(i);
        let count = heaviest(&idx, usize::MAX);
        return Ok(Net::strong(
            RangeFamily::Halfplanes,
            idx,
            exact::frac(count as i64, n as i64),
        ));
    }
    let limit = 2 * n / (i + 1);
    let prune = |walked: Vec<usize>| {
        let mut order = Vec::new();
        if let (Some(&f), Some(&l)) = (walked.first(), walked.last()) {
            order.push(f);
            order.push(l);
        }
        order.extend(walked.iter().copied());
        order.dedup();
        let mut net = walked;
        for k in order {
            if net.len() <= 1 || !net.contains(&k) {
                continue;
            }
            let trial: Vec<usize> = net.iter().copied().filter(|&v| v != k).collect();
            if heaviest(&trial, limit + 1) <= limit {
                net = trial;
            }
        }
        net
    };
    let mut smallest = usize::MAX;
    let mut found = None;
    for start in 0..hull.len() {
        let mut rotated = hull.clone();
        rotated.rotate_left(start);
        let walked: Vec<usize> = walk(pts, &rotated, limit)
            .into_iter()
            .map(|z| rotated[z])
            .collect();
        if heaviest(&walked, limit + 1) > limit {
            return Err(Error::Defect("hull walk left a heavy halfplane".into()));
        }
        let net = prune(walked);
        if net.len() <= i {
            found = Some(net);
            break;
        }
        smallest = smallest.min(net.len());
    }
    let net = match found {
        Some(net) => net,
        None => {
            let best = verify_lower_bound_with_budget(
                ps,
                RangeFamily::Halfplanes,
                i,
                Mode::Exhaustive,
                DEFAULT_BUDGET,
            )?;
            if best.max_count > limit {
                return Err(Error::Defect(format!(
                    "hull walk produced {smallest} points for i = {i} and no {i}-point net reaches the bound"
                )));
            }
            best.net.indices().unwrap_or_default().to_vec()
        }
    };
    Ok(Net::strong(
        RangeFamily::Halfplanes,
        net,
        exact::frac(2, i as i64 + 1),
    ))
}
