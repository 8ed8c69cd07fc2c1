//! Strong nets for axis-parallel boxes.
//!
//! All constructions run on coordinate ranks of a subset of the input, so a
//! recursive call on a slab sees exactly the order statistics of that slab.

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{ranks, PointSet};
use crate::net::Net;
use crate::oracle::{Adversary, BoxAdversary};

/// Largest net size with a construction.
pub const MAX_RECT_SIZE: usize = 10;

/// Best known upper bound for planar rectangle nets of size `i`, as built
/// by [`build_rect_net`].
pub fn rect_upper_bound(i: usize) -> Rational {
    let (p, q) = match i {
        0 => (1, 1),
        1 => (3, 4),
        2 => (5, 8),
        3 => (9, 16),
        4 => (1, 2),
        5 | 6 => (15, 32),
        7 => (3, 7),
        8 => (2, 5),
        9 => (5, 13),
        _ => (3, 8),
    };
    exact::frac(p, q)
}

/// Claimed epsilon of the one-point recursion with parameters `(x, y)`.
pub fn onept_eps(x: usize, y: usize) -> Rational {
    let z = (x + y) / 2;
    let (ex, ey, ez) = (
        rect_upper_bound(x),
        rect_upper_bound(y),
        rect_upper_bound(z),
    );
    let a = exact::frac(3, 4) * ex;
    let b = &ey * &ez / (&ey + &ez);
    a.max(b)
}

/// Claimed epsilon of the grid construction.
pub fn grid_eps(x: usize, y: usize, j: usize, k: usize) -> Rational {
    let a = exact::int(2) * rect_upper_bound(j) / exact::int(x as i64);
    let b = rect_upper_bound(k) / exact::int(y as i64);
    a.max(b)
}

struct Ranked {
    rank: Vec<Vec<usize>>,
}

impl Ranked {
    fn new(ps: &PointSet) -> Result<Ranked> {
        ps.require_distinct()?;
        Ok(Ranked { rank: ranks(ps) })
    }

    /// Ranks of `sub` restricted to the subset, per axis (same order as `sub`).
    fn local(&self, sub: &[usize], axis: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..sub.len()).collect();
        order.sort_by_key(|&k| self.rank[sub[k]][axis]);
        let mut out = vec![0; sub.len()];
        for (r, &k) in order.iter().enumerate() {
            out[k] = r;
        }
        out
    }

    fn centerpoint(&self, sub: &[usize]) -> usize {
        let d = self.rank.first().map_or(0, |r| r.len());
        let m = sub.len();
        let s = m.div_ceil(2 * d) - 1;
        let loc: Vec<Vec<usize>> = (0..d).map(|a| self.local(sub, a)).collect();
        let k = (0..m)
            .find(|&k| loc.iter().all(|l| l[k] >= s && l[k] + s < m))
            .expect("outer slabs hold fewer than m points");
        sub[k]
    }

    /// Point of `sub` whose closed upper-right quadrant halves contain at
    /// least half of `sub` each, after reflecting the flagged axes.
    fn dominant(&self, sub: &[usize], flip: [bool; 2]) -> usize {
        let m = sub.len();
        let loc: Vec<Vec<usize>> = (0..2)
            .map(|a| {
                let l = self.local(sub, a);
                if flip[a] {
                    l.into_iter().map(|r| m - 1 - r).collect()
                } else {
                    l
                }
            })
            .collect();
        let half = m.div_ceil(2);
        let k = (0..m)
            .find(|&k| loc[0][k] < half && loc[1][k] < half)
            .unwrap_or_else(|| {
                (0..m)
                    .filter(|&k| loc[0][k] < half)
                    .min_by_key(|&k| loc[1][k])
                    .unwrap()
            });
        debug_assert!(loc[0][k] <= m / 2 && loc[1][k] <= m / 2);
        sub[k]
    }

    fn net2(&self, sub: &[usize]) -> Vec<usize> {
        let m = sub.len();
        if m <= 2 {
            return sub.to_vec();
        }
        let s = 3 * m / 8;
        let cell = |r: usize| {
            if r < s {
                0
            } else if r + s >= m {
                2
            } else {
                1
            }
        };
        let (lx, ly) = (self.local(sub, 0), self.local(sub, 1));
        let (col, row): (Vec<usize>, Vec<usize>) =
            (0..m).map(|k| (cell(lx[k]), cell(ly[k]))).unzip();
        if let Some(k) = (0..m).find(|&k| col[k] == 1 && row[k] == 1) {
            return vec![sub[k]];
        }
        let pick = |fx: fn(usize) -> bool, fy: fn(usize) -> bool| -> Vec<usize> {
            (0..m)
                .filter(|&k| fx(col[k]) && fy(row[k]))
                .map(|k| sub[k])
                .collect()
        };
        let lo: fn(usize) -> bool = |c| c <= 1;
        let hi: fn(usize) -> bool = |c| c >= 1;
        let p1 = pick(lo, hi);
        let p2 = pick(hi, hi);
        let p3 = pick(lo, lo);
        let p4 = pick(hi, lo);
        let mut out = Vec::new();
        let mut add = |set: &[usize], flip: [bool; 2]| {
            if !set.is_empty() {
                out.push(self.dominant(set, flip));
            }
        };
        if p2.len() + p3.len() >= p1.len() + p4.len() {
            add(&p2, [false, false]);
            add(&p3, [true, true]);
        } else {
            add(&p1, [true, false]);
            add(&p4, [false, true]);
        }
        out
    }

    fn onept(&self, sub: &[usize], x: usize, y: usize) -> Vec<usize> {
        if sub.is_empty() {
            return Vec::new();
        }
        let q = self.centerpoint(sub);
        let z = (x + y) / 2;
        let (ey, ez) = (rect_upper_bound(y), rect_upper_bound(z));
        let m = exact::int(sub.len() as i64);
        let heavy = |part: &[usize]| exact::int(part.len() as i64) * (&ey + &ez) >= &ey * &m;
        let mut out = vec![q];
        for axis in 0..2 {
            let qr = self.rank[q][axis];
            let below: Vec<usize> = sub
                .iter()
                .copied()
                .filter(|&p| self.rank[p][axis] < qr)
                .collect();
            let above: Vec<usize> = sub
                .iter()
                .copied()
                .filter(|&p| self.rank[p][axis] > qr)
                .collect();
            // Left before right; top before bottom.
            let (first, second) = if axis == 0 {
                (below, above)
            } else {
                (above, below)
            };
            let (a, b) = if heavy(&first) {
                (self.best(&first, x), self.best(&second, y))
            } else if heavy(&second) {
                (self.best(&first, y), self.best(&second, x))
            } else {
                (self.best(&first, z), self.best(&second, z))
            };
            out.extend(a);
            out.extend(b);
        }
        out
    }

    fn grid(&self, sub: &[usize], x: usize, y: usize, j: usize, k: usize) -> Vec<usize> {
        let m = sub.len();
        if m == 0 {
            return Vec::new();
        }
        let (lx, ly) = (self.local(sub, 0), self.local(sub, 1));
        let slab = |r: usize, parts: usize| (0..parts).rfind(|&t| t * m / parts <= r).unwrap();
        let mut out = Vec::new();
        for t in 1..x.saturating_sub(1) {
            let members: Vec<usize> = (0..m).filter(|&c| slab(ly[c], x) == t).collect();
            for line in 1..y {
                let b = line * m / y;
                if let Some(&c) = members
                    .iter()
                    .filter(|&&c| lx[c] < b)
                    .max_by_key(|&&c| lx[c])
                {
                    out.push(sub[c]);
                }
                if let Some(&c) = members
                    .iter()
                    .filter(|&&c| lx[c] >= b)
                    .min_by_key(|&&c| lx[c])
                {
                    out.push(sub[c]);
                }
            }
        }
        for t in 0..x {
            let part: Vec<usize> = (0..m)
                .filter(|&c| slab(ly[c], x) == t)
                .map(|c| sub[c])
                .collect();
            out.extend(self.best(&part, j));
        }
        for t in 0..y {
            let part: Vec<usize> = (0..m)
                .filter(|&c| slab(lx[c], y) == t)
                .map(|c| sub[c])
                .collect();
            out.extend(self.best(&part, k));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Best known construction using at most `size` points of `sub`.
    fn best(&self, sub: &[usize], size: usize) -> Vec<usize> {
        if sub.len() <= size {
            return sub.to_vec();
        }
        match size {
            0 => Vec::new(),
            1 => vec![self.centerpoint(sub)],
            2 => self.net2(sub),
            3 => self.onept(sub, 1, 0),
            4 => self.grid(sub, 4, 2, 0, 0),
            5 | 6 => self.onept(sub, 2, 0),
            7 => self.onept(sub, 3, 0),
            8 => self.grid(sub, 5, 2, 0, 1),
            9 => self.onept(sub, 4, 0),
            _ => self.grid(sub, 4, 2, 1, 1),
        }
    }
}

fn planar(ps: &PointSet) -> Result<Ranked> {
    ps.expect_dim(2)?;
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    Ranked::new(ps)
}

fn all(ps: &PointSet) -> Vec<usize> {
    (0..ps.len()).collect()
}

/// One point of the central cell of the `3^d` slab partition whose outer
/// slabs hold `ceil(n / 2d) - 1` points each.
///
/// Every box avoiding it misses a whole outer slab, so it holds at most
/// `n - ceil(n / 2d)` points.
pub fn build_box_strong_centerpoint(ps: &PointSet, d: usize) -> Result<Net> {
    ps.expect_dim(d)?;
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let r = Ranked::new(ps)?;
    let eps = exact::frac(2 * d as i64 - 1, 2 * d as i64);
    Ok(Net::strong(
        RangeFamily::Boxes(d),
        vec![r.centerpoint(&all(ps))],
        eps,
    ))
}

/// A point `p` such that the closed halfplanes `x >= p.x` and `y >= p.y`
/// each contain at least `ceil(n / 2)` points.
pub fn find_dominant_point(ps: &PointSet) -> Result<usize> {
    Ok(planar(ps)?.dominant(&all(ps), [false, false]))
}

/// Net of at most two points with epsilon `5/8`.
///
/// Below eight points the slab construction is meaningless; the best pair
/// is then found exhaustively and its exact epsilon is claimed instead.
pub fn build_rect_net2(ps: &PointSet) -> Result<Net> {
    let r = planar(ps)?;
    let n = ps.len();
    if n >= 8 {
        return Ok(Net::strong(
            RangeFamily::Boxes(2),
            r.net2(&all(ps)),
            rect_upper_bound(2),
        ));
    }
    let adv = BoxAdversary::new(ps)?;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for a in 0..n {
        for b in a..n {
            let mut blocked = vec![false; n];
            blocked[a] = true;
            blocked[b] = true;
            let count = adv.solve(&blocked, usize::MAX, &mut 0).count;
            if best.as_ref().is_none_or(|(c, _)| count < *c) {
                best = Some((count, vec![a, b]));
            }
        }
    }
    let (count, idx) = best.expect("n >= 1");
    Ok(Net::strong(
        RangeFamily::Boxes(2),
        idx,
        exact::frac(count as i64, n as i64),
    ))
}

/// The one-point recursion: a strong centerpoint, then nets of sizes `x`,
/// `y` or `z = floor((x + y) / 2)` on the slabs on either side of it.
pub fn build_rect_net_onept(ps: &PointSet, x: usize, y: usize) -> Result<Net> {
    if y > x {
        return Err(Error::InvalidParameter(format!(
            "onept needs x >= y, got x = {x}, y = {y}"
        )));
    }
    if x > MAX_RECT_SIZE {
        return Err(Error::InvalidParameter(format!(
            "onept sub-nets are available up to size {MAX_RECT_SIZE}"
        )));
    }
    let r = planar(ps)?;
    Ok(Net::strong(
        RangeFamily::Boxes(2),
        r.onept(&all(ps), x, y),
        onept_eps(x, y),
    ))
}

/// The grid construction with `x` horizontal and `y` vertical slabs and
/// recursive nets of sizes `j` and `k` per slab.
pub fn build_rect_net_grid(ps: &PointSet, x: usize, y: usize, j: usize, k: usize) -> Result<Net> {
    if x < 2 || y < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs x, y >= 2, got {x}, {y}"
        )));
    }
    if j > MAX_RECT_SIZE || k > MAX_RECT_SIZE {
        return Err(Error::InvalidParameter(format!(
            "grid sub-nets are available up to size {MAX_RECT_SIZE}"
        )));
    }
    let r = planar(ps)?;
    Ok(Net::strong(
        RangeFamily::Boxes(2),
        r.grid(&all(ps), x, y, j, k),
        grid_eps(x, y, j, k),
    ))
}

/// Best known planar rectangle net of size at most `i`.
pub fn build_rect_net(ps: &PointSet, i: usize) -> Result<Net> {
    if i > MAX_RECT_SIZE {
        return Err(Error::InvalidParameter(format!(
            "rectangle nets are available up to size {MAX_RECT_SIZE}"
        )));
    }
    let r = planar(ps)?;
    let idx = r.best(&all(ps), i);
    let eps = if idx.len() == ps.len() {
        exact::int(0)
    } else {
        rect_upper_bound(i)
    };
    Ok(Net::strong(RangeFamily::Boxes(2), idx, eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn table_constants() {
        assert_eq!(onept_eps(1, 0), frac(9, 16));
        assert_eq!(onept_eps(2, 0), frac(15, 32));
        assert_eq!(onept_eps(3, 0), frac(3, 7));
        assert_eq!(onept_eps(4, 0), frac(5, 13));
        assert_eq!(grid_eps(4, 2, 0, 0), frac(1, 2));
        assert_eq!(grid_eps(5, 2, 0, 1), frac(2, 5));
        assert_eq!(grid_eps(4, 2, 1, 1), frac(3, 8));
    }

    #[test]
    fn centerpoint_of_cross_with_origin() {
        let ps =
            PointSet::from_ints(2, &[&[-2, 1], &[2, -1], &[1, 2], &[-1, -2], &[0, 0]]).unwrap();
        let net = build_box_strong_centerpoint(&ps, 2).unwrap();
        assert_eq!(net.indices().unwrap(), &[4]);
        assert_eq!(net.claimed_eps, frac(3, 4));
    }

    #[test]
    fn dominant_point_of_two() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 1]]).unwrap();
        assert_eq!(find_dominant_point(&ps).unwrap(), 0);
    }

    #[test]
    fn sizes_respect_budgets() {
        let pts: Vec<Vec<i64>> = (0..64)
            .map(|k| vec![(k * 37) % 64, (k * 11 + 5) % 64])
            .collect();
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        let ps = PointSet::from_ints(2, &refs).unwrap();
        for i in 0..=MAX_RECT_SIZE {
            assert!(build_rect_net(&ps, i).unwrap().size() <= i);
        }
        assert!(build_rect_net_onept(&ps, 2, 1).unwrap().size() <= 7);
        assert!(build_rect_net_grid(&ps, 3, 3, 1, 0).unwrap().size() <= 2 * 2 + 3);
    }

    #[test]
    fn duplicate_coordinates_are_rejected() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            build_rect_net2(&ps),
            Err(Error::DuplicateCoordinates { .. })
        ));
    }
}
