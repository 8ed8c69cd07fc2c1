//! Lower-bound certification: the minimum, over all nets of a given size, of
//! the adversary's best count.
//!
//! Nets are enumerated in lexicographic order of positions. Every adversary
//! answer is cached as a witness set; a subtree of the enumeration is cut
//! as soon as some cached witness at least as heavy as the current minimum
//! avoids every net the subtree can still produce.

use super::disk::DiskAdversary;
use super::halfplane::HalfplaneAdversary;
use super::witness::Witness;
use super::{adversary_for, oracle_report, Adversary};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::net::Net;

/// Exact predicate evaluations allowed before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

const CACHE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Nets over point indices in input order.
    Exhaustive,
    /// Nets enumerated cluster by cluster (requires labels), so that witnesses
    /// made of whole clusters cut large subtrees early.
    Clustered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    /// Minimum over the enumerated nets of the adversary fraction.
    pub fraction: Rational,
    pub max_count: usize,
    pub n: usize,
    /// A minimizing net, with `claimed_eps` set to `fraction`.
    pub net: Net,
    /// Best avoiding range for that net.
    pub witness: Witness,
    pub nets_examined: u64,
    pub predicate_ops: u64,
}

impl LowerBoundReport {
    pub fn to_json(&self, ps: &PointSet) -> serde_json::Value {
        serde_json::json!({
            "fraction": exact::to_pq(&self.fraction),
            "max_count": self.max_count,
            "n": self.n,
            "net": crate::io::net_to_json(&self.net, ps),
            "witness": self.witness.to_json(),
            "nets_examined": self.nets_examined,
            "predicate_ops": self.predicate_ops,
        })
    }
}

struct Search<'a> {
    adv: &'a dyn Adversary,
    n: usize,
    i: usize,
    order: Vec<usize>,
    cache: Vec<(u128, usize)>,
    best: usize,
    best_net: u128,
    nets: u64,
    ops: u64,
    budget: u64,
}

impl Search<'_> {
    fn from(&self, start: usize) -> u128 {
        if start >= self.n {
            0
        } else {
            let all = if self.n == 128 {
                !0u128
            } else {
                (1u128 << self.n) - 1
            };
            all & (!0u128 << start)
        }
    }

    /// Whether a cached witness at least as heavy as the best avoids every
    /// net containing `chosen` and otherwise drawn from `future`.
    fn cut(&mut self, chosen: u128, future: u128) -> bool {
        let reach = chosen | future;
        if let Some(k) = self
            .cache
            .iter()
            .position(|&(w, c)| c >= self.best && w & reach == 0)
        {
            let hit = self.cache.remove(k);
            self.cache.insert(0, hit);
            return true;
        }
        false
    }

    fn leaf(&mut self, chosen: u128) -> Result<()> {
        if self.cut(chosen, 0) {
            return Ok(());
        }
        let mut blocked = vec![false; self.n];
        for (pos, &p) in self.order.iter().enumerate() {
            blocked[p] = chosen >> pos & 1 == 1;
        }
        let best = self.adv.solve(&blocked, self.best, &mut self.ops);
        self.nets += 1;
        if self.ops > self.budget {
            return Err(Error::BudgetExceeded {
                used: self.ops,
                budget: self.budget,
            });
        }
        let mut pos_of = vec![0usize; self.n];
        for (pos, &p) in self.order.iter().enumerate() {
            pos_of[p] = pos;
        }
        let mask = best
            .members
            .iter()
            .fold(0u128, |m, &p| m | 1u128 << pos_of[p]);
        if self.cache.len() == CACHE {
            self.cache.pop();
        }
        self.cache.insert(0, (mask, best.count));
        if best.count < self.best {
            self.best = best.count;
            self.best_net = chosen;
        }
        Ok(())
    }

    fn dfs(&mut self, start: usize, depth: usize, chosen: u128) -> Result<()> {
        if self.best == 0 {
            return Ok(());
        }
        if depth == self.i {
            return self.leaf(chosen);
        }
        if self.cut(chosen, self.from(start)) {
            return Ok(());
        }
        for p in start..=self.n - (self.i - depth) {
            self.dfs(p + 1, depth + 1, chosen | 1u128 << p)?;
            if self.best == 0 {
                break;
            }
        }
        Ok(())
    }
}

/// Minimum over all strong nets of size `i` of the family adversary's
/// fraction, under the default budget.
pub fn verify_lower_bound(
    ps: &PointSet,
    family: RangeFamily,
    i: usize,
    mode: Mode,
) -> Result<LowerBoundReport> {
    verify_lower_bound_with_budget(ps, family, i, mode, DEFAULT_BUDGET)
}

pub fn verify_lower_bound_with_budget(
    ps: &PointSet,
    family: RangeFamily,
    i: usize,
    mode: Mode,
    budget: u64,
) -> Result<LowerBoundReport> {
    let n = ps.len();
    if n == 0 {
        return Err(Error::EmptyPointSet);
    }
    if n > 128 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive verification supports at most 128 points, got {n}"
        )));
    }
    if i > n {
        return Err(Error::InvalidParameter(format!(
            "net size {i} exceeds n = {n}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    if mode == Mode::Clustered {
        let labels = ps
            .labels()
            .ok_or_else(|| Error::InvalidParameter("clustered mode needs cluster labels".into()))?;
        order.sort_by_key(|&p| (labels[p], p));
    }
    let adv = adversary_for(ps, family)?;
    let mut s = Search {
        adv: adv.as_ref(),
        n,
        i,
        order,
        cache: Vec::new(),
        best: usize::MAX,
        best_net: 0,
        nets: 0,
        ops: 0,
        budget,
    };
    s.dfs(0, 0, 0)?;
    let mut idx: Vec<usize> = (0..n)
        .filter(|&pos| s.best_net >> pos & 1 == 1)
        .map(|pos| s.order[pos])
        .collect();
    idx.sort_unstable();
    let fraction = exact::frac(s.best as i64, n as i64);
    let net = Net::strong(family, idx, fraction.clone());
    let report = oracle_report(ps, &net)?;
    if report.max_count != s.best {
        return Err(Error::Defect(
            "minimizing net re-evaluates differently".into(),
        ));
    }
    Ok(LowerBoundReport {
        fraction,
        max_count: s.best,
        n,
        net,
        witness: report.witness,
        nets_examined: s.nets,
        predicate_ops: s.ops,
    })
}

/// Candidate weak-net points: the distinct points of `ps`, then a
/// `resolution x resolution` grid spanning its bounding box.
pub fn sample_candidates(ps: &PointSet, resolution: usize) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in ps.points() {
        if seen.insert(p.clone()) {
            out.push(p.clone());
        }
    }
    if resolution == 0 || ps.is_empty() {
        return out;
    }
    let lo = |a: usize| {
        ps.points()
            .iter()
            .map(|p| p.coords[a].clone())
            .min()
            .unwrap()
    };
    let hi = |a: usize| {
        ps.points()
            .iter()
            .map(|p| p.coords[a].clone())
            .max()
            .unwrap()
    };
    let (x0, x1, y0, y1) = (lo(0), hi(0), lo(1), hi(1));
    let at = |a: &Rational, b: &Rational, k: usize| {
        if resolution == 1 {
            (a + b) / exact::int(2)
        } else {
            a + (b - a) * exact::frac(k as i64, resolution as i64 - 1)
        }
    };
    for kx in 0..resolution {
        for ky in 0..resolution {
            let p = Point::xy(at(&x0, &x1, kx), at(&y0, &y1, ky));
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

struct Bits(Vec<u64>);

impl Bits {
    fn of(n: usize, f: impl Fn(usize) -> bool) -> Bits {
        let mut v = vec![0u64; n.div_ceil(64)];
        for k in 0..n {
            if f(k) {
                v[k / 64] |= 1 << (k % 64);
            }
        }
        Bits(v)
    }

    fn get(&self, k: usize) -> bool {
        self.0[k / 64] >> (k % 64) & 1 == 1
    }

    fn none_from(&self, start: usize) -> bool {
        let w = start / 64;
        if w >= self.0.len() {
            return true;
        }
        let head = self.0[w] & (!0u64 << (start % 64));
        head == 0 && self.0[w + 1..].iter().all(|&x| x == 0)
    }
}

struct WeakSearch<'a> {
    ps: &'a PointSet,
    family: RangeFamily,
    cand: Vec<Point>,
    i: usize,
    cache: Vec<(Bits, usize)>,
    best: usize,
    best_net: Vec<usize>,
    best_witness: Option<Witness>,
    nets: u64,
    ops: u64,
    budget: u64,
}

impl WeakSearch<'_> {
    fn avoided(&self, chosen: &[usize], start: Option<usize>) -> Option<usize> {
        self.cache.iter().position(|(b, c)| {
            *c >= self.best
                && chosen.iter().all(|&k| !b.get(k))
                && start.is_none_or(|s| b.none_from(s))
        })
    }

    fn leaf(&mut self, chosen: &[usize]) -> Result<()> {
        if let Some(k) = self.avoided(chosen, None) {
            let hit = self.cache.remove(k);
            self.cache.insert(0, hit);
            return Ok(());
        }
        let pts: Vec<Point> = chosen.iter().map(|&k| self.cand[k].clone()).collect();
        let blocked = vec![false; self.ps.len()];
        let (count, witness) = match self.family {
            RangeFamily::Disks => {
                let adv = DiskAdversary::new(self.ps, &pts)?;
                let (c, d) = adv.solve_desc(&blocked, self.best, &mut self.ops);
                (c, adv.witness(d.as_ref()))
            }
            _ => {
                let adv = HalfplaneAdversary::new(self.ps, &pts)?;
                let (c, d) = adv.solve_desc(&blocked, self.best, &mut self.ops);
                (c, adv.witness(d.as_ref()))
            }
        };
        self.nets += 1;
        self.ops += self.cand.len() as u64;
        if self.ops > self.budget {
            return Err(Error::BudgetExceeded {
                used: self.ops,
                budget: self.budget,
            });
        }
        let bits = Bits::of(self.cand.len(), |k| witness.contains(&self.cand[k]));
        if self.cache.len() == CACHE {
            self.cache.pop();
        }
        self.cache.insert(0, (bits, count));
        if count < self.best {
            self.best = count;
            self.best_net = chosen.to_vec();
            self.best_witness = Some(witness);
        }
        Ok(())
    }

    fn dfs(&mut self, start: usize, chosen: &mut Vec<usize>) -> Result<()> {
        if self.best == 0 {
            return Ok(());
        }
        if chosen.len() == self.i {
            return self.leaf(chosen);
        }
        if self.avoided(chosen, Some(start)).is_some() {
            return Ok(());
        }
        let m = self.cand.len();
        let last = chosen.len() + 1 == self.i;
        for k in start..=m - (self.i - chosen.len()) {
            // The last pick must hit every heavy cached witness still unhit.
            if last
                && self
                    .cache
                    .iter()
                    .any(|(b, c)| *c >= self.best && !b.get(k) && chosen.iter().all(|&j| !b.get(j)))
            {
                continue;
            }
            chosen.push(k);
            let r = self.dfs(k + 1, chosen);
            chosen.pop();
            r?;
            if self.best == 0 {
                break;
            }
        }
        Ok(())
    }
}

/// Minimum, over all `i`-subsets of sampled candidate points, of the
/// adversary fraction for the resulting weak net.
///
/// The true weak epsilon of size `i` is at most the returned value, and the
/// candidates include `ps`, so the value is also at most the strong minimum.
pub fn verify_weak_lower_bound_sampled(
    ps: &PointSet,
    family: RangeFamily,
    i: usize,
    resolution: usize,
) -> Result<LowerBoundReport> {
    verify_weak_lower_bound_sampled_with_budget(ps, family, i, resolution, DEFAULT_BUDGET)
}

pub fn verify_weak_lower_bound_sampled_with_budget(
    ps: &PointSet,
    family: RangeFamily,
    i: usize,
    resolution: usize,
    budget: u64,
) -> Result<LowerBoundReport> {
    if !matches!(family, RangeFamily::Disks | RangeFamily::Halfplanes) {
        return Err(Error::FamilyMismatch {
            expected: "disks or halfplanes".into(),
            got: family.to_string(),
        });
    }
    ps.expect_dim(2)?;
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let cand = sample_candidates(ps, resolution);
    if i > cand.len() {
        return Err(Error::InvalidParameter(format!(
            "net size {i} exceeds {} candidates",
            cand.len()
        )));
    }
    let mut s = WeakSearch {
        ps,
        family,
        cand,
        i,
        cache: Vec::new(),
        best: usize::MAX,
        best_net: Vec::new(),
        best_witness: None,
        nets: 0,
        ops: 0,
        budget,
    };
    s.dfs(0, &mut Vec::new())?;
    let n = ps.len();
    let fraction = exact::frac(s.best as i64, n as i64);
    let pts = s.best_net.iter().map(|&k| s.cand[k].clone()).collect();
    Ok(LowerBoundReport {
        fraction: fraction.clone(),
        max_count: s.best,
        n,
        net: Net::weak(family, pts, fraction),
        witness: s.best_witness.expect("at least one net is evaluated"),
        nets_examined: s.nets,
        predicate_ops: s.ops,
    })
}
