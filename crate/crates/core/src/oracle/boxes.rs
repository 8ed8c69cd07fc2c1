//! Exact adversary for axis-parallel boxes in dimensions one to three.
//!
//! With distinct coordinates a set `S` is cut out by a box avoiding the net
//! iff its bounding box holds no net point, so the search runs on ranks:
//! fix the left and right x-ranks, then the best y-interval is the longest
//! run of free points between blocked ones. Dimension three adds an outer
//! loop over z-intervals.

use super::witness::Witness;
use super::{Adversary, Best};
use crate::error::{Error, Result};
use crate::exact;
use crate::geom::{ranks, PointSet};

const FREE: u8 = 1;
const BLOCKED: u8 = 2;

pub(crate) struct BoxAdversary<'a> {
    ps: &'a PointSet,
    rank: Vec<Vec<usize>>,
    by_rank: Vec<Vec<usize>>,
}

impl<'a> BoxAdversary<'a> {
    pub(crate) fn new(ps: &'a PointSet) -> Result<Self> {
        let d = ps.dim();
        if !(1..=3).contains(&d) {
            return Err(Error::UnsupportedDimension(d));
        }
        ps.require_distinct()?;
        let rank = ranks(ps);
        let mut by_rank = vec![vec![0usize; ps.len()]; d];
        for (i, row) in rank.iter().enumerate() {
            for (axis, &r) in row.iter().enumerate() {
                by_rank[axis][r] = i;
            }
        }
        Ok(BoxAdversary { ps, rank, by_rank })
    }

    fn solve1(&self, blocked: &[bool], ops: &mut u64) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        let mut run = Vec::new();
        for &i in &self.by_rank[0] {
            *ops += 1;
            if blocked[i] {
                run.clear();
            } else {
                run.push(i);
                if run.len() > best.len() {
                    best = run.clone();
                }
            }
        }
        best
    }

    /// Best (count, l, r, ylo, yhi) among points with `active` set.
    fn sweep2(
        &self,
        active: &[bool],
        blocked: &[bool],
        stop_at: usize,
        ops: &mut u64,
        state: &mut [u8],
    ) -> (usize, [usize; 4]) {
        let n = self.ps.len();
        let (bx, ry) = (&self.by_rank[0], &self.rank);
        let mut best = (0usize, [0usize; 4]);
        for l in 0..n {
            let first = bx[l];
            if !active[first] || blocked[first] {
                continue;
            }
            state.iter_mut().for_each(|s| *s = 0);
            for (r, &p) in bx.iter().enumerate().skip(l) {
                if !active[p] {
                    continue;
                }
                *ops += 1;
                let y = ry[p][1];
                if blocked[p] {
                    state[y] = BLOCKED;
                    continue;
                }
                state[y] = FREE;
                let mut count = 1;
                let mut lo = y;
                while lo > 0 && state[lo - 1] != BLOCKED {
                    lo -= 1;
                    count += (state[lo] == FREE) as usize;
                }
                let mut hi = y;
                while hi + 1 < n && state[hi + 1] != BLOCKED {
                    hi += 1;
                    count += (state[hi] == FREE) as usize;
                }
                if count > best.0 {
                    best = (count, [l, r, lo, hi]);
                    if count >= stop_at {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn members2(&self, active: &[bool], blocked: &[bool], b: [usize; 4]) -> Vec<usize> {
        (0..self.ps.len())
            .filter(|&i| {
                let r = &self.rank[i];
                active[i]
                    && !blocked[i]
                    && (b[0]..=b[1]).contains(&r[0])
                    && (b[2]..=b[3]).contains(&r[1])
            })
            .collect()
    }

    fn solve3(&self, blocked: &[bool], stop_at: usize, ops: &mut u64) -> Vec<usize> {
        let n = self.ps.len();
        let mut state = vec![0u8; n];
        let mut best: Vec<usize> = Vec::new();
        let bz = &self.by_rank[2];
        for zl in 0..n {
            if blocked[bz[zl]] {
                continue;
            }
            let mut active = vec![false; n];
            for &p in &bz[zl..] {
                active[p] = true;
                if blocked[p] {
                    continue;
                }
                let (count, b) = self.sweep2(&active, blocked, stop_at, ops, &mut state);
                if count > best.len() {
                    best = self.members2(&active, blocked, b);
                    if best.len() >= stop_at {
                        return best;
                    }
                }
            }
        }
        best
    }

    pub(crate) fn witness(&self, members: &[usize]) -> Witness {
        let d = self.ps.dim();
        if members.is_empty() {
            let beyond: Vec<_> = (0..d)
                .map(|axis| {
                    self.ps.point(self.by_rank[axis][self.ps.len() - 1]).coords[axis].clone()
                        + exact::int(1)
                })
                .collect();
            return Witness::Box {
                lo: beyond.clone(),
                hi: beyond,
            };
        }
        let pick = |axis: usize, max: bool| {
            let it = members.iter().map(|&i| &self.ps.point(i).coords[axis]);
            if max { it.max() } else { it.min() }.unwrap().clone()
        };
        Witness::Box {
            lo: (0..d).map(|a| pick(a, false)).collect(),
            hi: (0..d).map(|a| pick(a, true)).collect(),
        }
    }
}

impl Adversary for BoxAdversary<'_> {
    fn solve(&self, blocked: &[bool], stop_at: usize, ops: &mut u64) -> Best {
        let members = match self.ps.dim() {
            1 => self.solve1(blocked, ops),
            2 => {
                let n = self.ps.len();
                let all = vec![true; n];
                let mut state = vec![0u8; n];
                let (count, b) = self.sweep2(&all, blocked, stop_at, ops, &mut state);
                if count == 0 {
                    Vec::new()
                } else {
                    self.members2(&all, blocked, b)
                }
            }
            _ => self.solve3(blocked, stop_at, ops),
        };
        Best {
            count: members.len(),
            members,
        }
    }
}
