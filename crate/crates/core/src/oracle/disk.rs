//! Exact adversary for closed disks.
//!
//! Lifting to the paraboloid turns disks into lower halfspaces, so a set cut
//! out by a disk avoiding the net is cut out by one whose circle passes
//! through three locations, keeping any cyclic arc of the on-circle
//! locations; halfplanes (infinite radius) and single locations cover the
//! remaining normal forms.

use num_traits::{One, Signed, Zero};

use super::halfplane::{best_line, line_selection, line_witness, LineDesc};
use super::sites::Sites;
use super::witness::Witness;
use super::{Adversary, Best};
use crate::error::Result;
use crate::exact::Rational;
use crate::geom::hull::hull_indices;
use crate::geom::kernel::{cross, in_circle, orient_sign, sign, sub, Exact, P2};
use crate::geom::{Point, PointSet};
use crate::with_coords;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CircleDesc {
    /// Counter-clockwise defining triple.
    pub(crate) tri: [usize; 3],
    /// On-circle locations kept, a cyclic arc.
    pub(crate) arc: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DiskDesc {
    Circle(CircleDesc),
    Line(LineDesc),
    Single(usize),
}

/// Heaviest cyclic arc of `ring` free of blocked locations.
fn best_arc(ring: &[usize], w: &[usize], blk: &[bool]) -> (usize, Vec<usize>) {
    let Some(b) = ring.iter().position(|&j| blk[j]) else {
        return (ring.iter().map(|&j| w[j]).sum(), ring.to_vec());
    };
    let m = ring.len();
    let (mut best, mut best_run) = (0usize, Vec::new());
    let (mut cur, mut run) = (0usize, Vec::new());
    for step in 1..=m {
        let j = ring[(b + step) % m];
        if blk[j] {
            cur = 0;
            run.clear();
        } else {
            cur += w[j];
            run.push(j);
            if cur > best {
                best = cur;
                best_run = run.clone();
            }
        }
    }
    (best, best_run)
}

pub(crate) fn best_circle<T: Exact>(
    q: &[P2<T>],
    w: &[usize],
    blk: &[bool],
    stop_at: usize,
    ops: &mut u64,
) -> (usize, Option<CircleDesc>) {
    let m = q.len();
    let mut best = (0usize, None);
    let mut on: Vec<usize> = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            'triple: for c in b + 1..m {
                *ops += 1;
                let tri = match orient_sign(&q[a], &q[b], &q[c]) {
                    0 => continue,
                    1 => [a, b, c],
                    _ => [a, c, b],
                };
                let (mut inside, mut on_w) = (0usize, 0usize);
                on.clear();
                for j in 0..m {
                    *ops += 1;
                    match sign(&in_circle(&q[tri[0]], &q[tri[1]], &q[tri[2]], &q[j])) {
                        1 => {
                            if blk[j] {
                                continue 'triple;
                            }
                            inside += w[j];
                        }
                        0 => {
                            on.push(j);
                            on_w += w[j];
                        }
                        _ => {}
                    }
                }
                if inside + on_w <= best.0 {
                    continue;
                }
                let pts: Vec<P2<T>> = on.iter().map(|&j| q[j].clone()).collect();
                let ring: Vec<usize> = hull_indices(&pts).into_iter().map(|k| on[k]).collect();
                let (arc_w, arc) = best_arc(&ring, w, blk);
                let count = inside + arc_w;
                if count > best.0 {
                    best = (count, Some(CircleDesc { tri, arc }));
                    if count >= stop_at {
                        return best;
                    }
                }
            }
        }
    }
    best
}

pub(crate) fn best_disk<T: Exact>(
    q: &[P2<T>],
    w: &[usize],
    blk: &[bool],
    stop_at: usize,
    ops: &mut u64,
) -> (usize, Option<DiskDesc>) {
    let mut best: (usize, Option<DiskDesc>) = (0, None);
    for (j, (&wj, &bj)) in w.iter().zip(blk).enumerate() {
        if !bj && wj > best.0 {
            best = (wj, Some(DiskDesc::Single(j)));
        }
    }
    if best.0 >= stop_at {
        return best;
    }
    let (c, d) = best_circle(q, w, blk, stop_at, ops);
    if c > best.0 {
        best = (c, d.map(DiskDesc::Circle));
        if c >= stop_at {
            return best;
        }
    }
    let (c, d) = best_line(q, w, blk, stop_at, ops);
    if c > best.0 {
        best = (c, d.map(DiskDesc::Line));
    }
    best
}

pub(crate) fn disk_selection<T: Exact>(q: &[P2<T>], desc: &DiskDesc) -> Vec<bool> {
    match desc {
        DiskDesc::Single(j) => (0..q.len()).map(|i| i == *j).collect(),
        DiskDesc::Line(l) => line_selection(q, l),
        DiskDesc::Circle(cd) => {
            let [a, b, c] = cd.tri;
            q.iter()
                .enumerate()
                .map(|(j, p)| sign(&in_circle(&q[a], &q[b], &q[c], p)) > 0 || cd.arc.contains(&j))
                .collect()
        }
    }
}

/// Affine `l` positive on `arc` and negative on the rest of `ring`.
fn arc_separator(q: &[P2<Rational>], ring: &[usize], arc: &[usize]) -> [Rational; 3] {
    let one = Rational::one();
    let zero = Rational::zero();
    if arc.len() == ring.len() {
        return [zero.clone(), zero, one];
    }
    if arc.is_empty() {
        return [zero.clone(), zero, -one];
    }
    let m = ring.len();
    let inarc = |k: usize| arc.contains(&ring[k % m]);
    let i = (0..m).find(|&k| inarc(k) && !inarc(k + m - 1)).unwrap();
    let j = (0..m).find(|&k| inarc(k) && !inarc(k + 1)).unwrap();
    let two = Rational::from_integer(2.into());
    let mid = |x: usize, y: usize| {
        let (p, r) = (&q[ring[x % m]], &q[ring[y % m]]);
        [(&p[0] + &r[0]) / &two, (&p[1] + &r[1]) / &two]
    };
    let m1 = mid(j, j + 1);
    let m2 = mid(i + m - 1, i);
    let dir = if m1 == m2 {
        let e = sub(&q[ring[(j + 1) % m]], &q[ring[j]]);
        [-e[1].clone(), e[0].clone()]
    } else {
        sub(&m2, &m1)
    };
    // l(p) = cross(dir, p - m1) = -dir.y x + dir.x y + (dir.y m1.x - dir.x m1.y).
    let mut f = [
        -dir[1].clone(),
        dir[0].clone(),
        &dir[1] * &m1[0] - &dir[0] * &m1[1],
    ];
    let probe = &q[ring[i]];
    if (&f[0] * &probe[0] + &f[1] * &probe[1] + &f[2]).is_negative() {
        f = [-f[0].clone(), -f[1].clone(), -f[2].clone()];
    }
    debug_assert!(cross(&dir, &sub(probe, &m1)) != Rational::zero());
    f
}

fn circle_witness(sites: &Sites, cd: &CircleDesc) -> Witness {
    let q = sites.rational_coords();
    let [a, b, c] = cd.tri;
    let big_f = |p: &P2<Rational>| in_circle(&q[a], &q[b], &q[c], p);
    let r = |x: i64, y: i64| {
        [
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        ]
    };
    let two = Rational::from_integer(2.into());
    // F(p) = C (x^2 + y^2) + A x + B y + D, with C < 0.
    let d0 = big_f(&r(0, 0));
    let (fx, fmx) = (big_f(&r(1, 0)), big_f(&r(-1, 0)));
    let (fy, fmy) = (big_f(&r(0, 1)), big_f(&r(0, -1)));
    let cc = (&fx + &fmx) / &two - &d0;
    let mut lin = [(&fx - &fmx) / &two, (&fy - &fmy) / &two, d0];
    let fvals: Vec<Rational> = q.iter().map(&big_f).collect();
    let on: Vec<usize> = (0..q.len()).filter(|&j| fvals[j].is_zero()).collect();
    let pts: Vec<P2<Rational>> = on.iter().map(|&j| q[j].clone()).collect();
    let ring: Vec<usize> = hull_indices(&pts).into_iter().map(|k| on[k]).collect();
    let l = arc_separator(&q, &ring, &cd.arc);
    let fmin = fvals
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.abs())
        .min()
        .unwrap_or_else(Rational::one);
    let lmax = q
        .iter()
        .map(|p| (&l[0] * &p[0] + &l[1] * &p[1] + &l[2]).abs())
        .max()
        .unwrap();
    let alpha = fmin / (&two * (lmax + Rational::one()));
    for k in 0..3 {
        lin[k] += &alpha * &l[k];
    }
    // {G >= 0} = {x^2 + y^2 + (A/C) x + (B/C) y + D/C <= 0}.
    let center = [-(&lin[0] / (&two * &cc)), -(&lin[1] / (&two * &cc))];
    let rsq = &center[0] * &center[0] + &center[1] * &center[1] - &lin[2] / &cc;
    let scale = sites.scale();
    Witness::Disk {
        center: sites.unmap(&center),
        radius_sq: rsq / (&scale * &scale),
    }
}

pub(crate) fn disk_witness(sites: &Sites, desc: Option<&DiskDesc>) -> Witness {
    match desc {
        None => {
            let maxx = sites
                .locs
                .iter()
                .map(|p| p.x().clone())
                .max()
                .unwrap_or_else(Rational::zero);
            let y = sites
                .locs
                .first()
                .map(|p| p.y().clone())
                .unwrap_or_else(Rational::zero);
            Witness::Disk {
                center: Point::xy(maxx + Rational::one(), y),
                radius_sq: Rational::zero(),
            }
        }
        Some(DiskDesc::Single(j)) => Witness::Disk {
            center: sites.locs[*j].clone(),
            radius_sq: Rational::zero(),
        },
        Some(DiskDesc::Line(l)) => line_witness(sites, Some(l)),
        Some(DiskDesc::Circle(cd)) => circle_witness(sites, cd),
    }
}

pub(crate) struct DiskAdversary {
    sites: Sites,
}

impl DiskAdversary {
    pub(crate) fn new(ps: &PointSet, extra: &[Point]) -> Result<Self> {
        ps.expect_dim(2)?;
        Ok(DiskAdversary {
            sites: Sites::new(ps.points(), extra)?,
        })
    }

    pub(crate) fn solve_desc(
        &self,
        blocked: &[bool],
        stop_at: usize,
        ops: &mut u64,
    ) -> (usize, Option<DiskDesc>) {
        let (w, blk) = self.sites.load(blocked);
        with_coords!(self.sites.frame, |c| best_disk(c, &w, &blk, stop_at, ops))
    }

    pub(crate) fn witness(&self, desc: Option<&DiskDesc>) -> Witness {
        disk_witness(&self.sites, desc)
    }
}

impl Adversary for DiskAdversary {
    fn solve(&self, blocked: &[bool], stop_at: usize, ops: &mut u64) -> Best {
        let (count, desc) = self.solve_desc(blocked, stop_at, ops);
        let members = match desc {
            None => Vec::new(),
            Some(d) => {
                let chosen = with_coords!(self.sites.frame, |c| disk_selection(c, &d));
                self.sites.members(&chosen)
            }
        };
        debug_assert_eq!(members.len(), count);
        Best { count, members }
    }
}
