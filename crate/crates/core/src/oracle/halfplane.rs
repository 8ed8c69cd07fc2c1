//! Exact adversary for closed halfplanes.
//!
//! Any set cut out by a closed halfplane avoiding the net is also cut out by
//! one whose boundary line passes through two locations (or through one
//! location, vertically), with the on-line locations split as a prefix,
//! suffix, all or none of their order along the line. Each such choice is
//! turned back into a strict halfplane by an explicit tilt.

use num_traits::{One, Signed, Zero};

use super::sites::Sites;
use super::witness::Witness;
use super::{Adversary, Best};
use crate::error::Result;
use crate::exact::Rational;
use crate::geom::kernel::{cross, dot, sign, sub, Exact, P2};
use crate::geom::{Point, PointSet};
use crate::with_coords;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OnChoice {
    All,
    Nothing,
    /// The first `k` on-line locations by position along the line.
    Prefix(usize),
    /// All but the first `k`.
    Suffix(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LineDesc {
    pub(crate) u: usize,
    /// Second location on the line; `None` means the vertical through `u`.
    pub(crate) v: Option<usize>,
    pub(crate) left: bool,
    pub(crate) on: OnChoice,
}

fn direction<T: Exact>(q: &[P2<T>], u: usize, v: Option<usize>) -> P2<T> {
    match v {
        Some(v) => sub(&q[v], &q[u]),
        None => [T::zero(), T::one()],
    }
}

/// Best weight of a halfplane avoiding blocked locations; stops at `stop_at`.
pub(crate) fn best_line<T: Exact>(
    q: &[P2<T>],
    w: &[usize],
    blk: &[bool],
    stop_at: usize,
    ops: &mut u64,
) -> (usize, Option<LineDesc>) {
    let m = q.len();
    let mut best = (0usize, None);
    let mut on: Vec<(T, usize)> = Vec::new();
    for u in 0..m {
        for v in (u + 1..m).map(Some).chain(std::iter::once(None)) {
            let d = direction(q, u, v);
            let (mut lw, mut rw) = (0usize, 0usize);
            let (mut lb, mut rb) = (false, false);
            on.clear();
            for j in 0..m {
                *ops += 1;
                let r = sub(&q[j], &q[u]);
                match sign(&cross(&d, &r)) {
                    1 => {
                        lw += w[j];
                        lb |= blk[j];
                    }
                    -1 => {
                        rw += w[j];
                        rb |= blk[j];
                    }
                    _ => on.push((dot(&d, &r), j)),
                }
            }
            if lb && rb {
                continue;
            }
            on.sort();
            let total: usize = on.iter().map(|&(_, j)| w[j]).sum();
            let choice = match on.iter().position(|&(_, j)| blk[j]) {
                None => (total, OnChoice::All),
                Some(first) => {
                    let last = on.iter().rposition(|&(_, j)| blk[j]).unwrap();
                    let pre: usize = on[..first].iter().map(|&(_, j)| w[j]).sum();
                    let suf: usize = on[last + 1..].iter().map(|&(_, j)| w[j]).sum();
                    if pre == 0 && suf == 0 {
                        (0, OnChoice::Nothing)
                    } else if pre >= suf {
                        (pre, OnChoice::Prefix(first))
                    } else {
                        (suf, OnChoice::Suffix(last + 1))
                    }
                }
            };
            for (left, side_w, side_b) in [(true, lw, lb), (false, rw, rb)] {
                if side_b {
                    continue;
                }
                let count = side_w + choice.0;
                if count > best.0 {
                    best = (
                        count,
                        Some(LineDesc {
                            u,
                            v,
                            left,
                            on: choice.1,
                        }),
                    );
                    if count >= stop_at {
                        return best;
                    }
                }
            }
        }
    }
    best
}

/// Locations selected by `desc`.
pub(crate) fn line_selection<T: Exact>(q: &[P2<T>], desc: &LineDesc) -> Vec<bool> {
    let d = direction(q, desc.u, desc.v);
    let s = if desc.left { 1 } else { -1 };
    let mut on: Vec<(T, usize)> = Vec::new();
    let mut chosen = vec![false; q.len()];
    for (j, p) in q.iter().enumerate() {
        let r = sub(p, &q[desc.u]);
        match sign(&cross(&d, &r)) * s {
            1 => chosen[j] = true,
            -1 => {}
            _ => on.push((dot(&d, &r), j)),
        }
    }
    on.sort();
    for (pos, &(_, j)) in on.iter().enumerate() {
        chosen[j] = match desc.on {
            OnChoice::All => true,
            OnChoice::Nothing => false,
            OnChoice::Prefix(k) => pos < k,
            OnChoice::Suffix(k) => pos >= k,
        };
    }
    chosen
}

/// Affine `(A, B, C)` with `A x + B y + C > 0` exactly on the selected
/// locations and `< 0` on all others, in frame coordinates.
pub(crate) fn line_function(q: &[P2<Rational>], desc: &LineDesc) -> [Rational; 3] {
    let u = &q[desc.u];
    let d = direction(q, desc.u, desc.v);
    let s = if desc.left {
        Rational::one()
    } else {
        -Rational::one()
    };
    let f: Vec<Rational> = q.iter().map(|p| &s * cross(&d, &sub(p, u))).collect();
    let t: Vec<Rational> = q.iter().map(|p| dot(&d, &sub(p, u))).collect();
    let fmin = f
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.abs())
        .min()
        .unwrap_or_else(Rational::one);
    let mut on_t: Vec<Rational> = f
        .iter()
        .zip(&t)
        .filter(|(fv, _)| fv.is_zero())
        .map(|(_, tv)| tv.clone())
        .collect();
    on_t.sort();
    let two = Rational::from_integer(2.into());
    // h(t) = c0 + c1 * t.
    let (c0, c1) = match desc.on {
        OnChoice::All => (&fmin / &two, Rational::zero()),
        OnChoice::Nothing => (-(&fmin / &two), Rational::zero()),
        OnChoice::Prefix(k) | OnChoice::Suffix(k) => {
            let t0 = (&on_t[k - 1] + &on_t[k]) / &two;
            let spread = t.iter().map(|tv| (tv - &t0).abs()).max().unwrap();
            let alpha = &fmin / (&two * (spread + Rational::one()));
            let c1 = if matches!(desc.on, OnChoice::Prefix(_)) {
                -alpha
            } else {
                alpha
            };
            (-(&c1 * &t0), c1)
        }
    };
    let a = -(&s * &d[1]) + &c1 * &d[0];
    let b = &s * &d[0] + &c1 * &d[1];
    let c = &s * (&d[1] * &u[0] - &d[0] * &u[1]) + c0 - &c1 * dot(&d, u);
    [a, b, c]
}

pub(crate) struct HalfplaneAdversary {
    sites: Sites,
}

impl HalfplaneAdversary {
    pub(crate) fn new(ps: &PointSet, extra: &[Point]) -> Result<Self> {
        ps.expect_dim(2)?;
        Ok(HalfplaneAdversary {
            sites: Sites::new(ps.points(), extra)?,
        })
    }

    pub(crate) fn solve_desc(
        &self,
        blocked: &[bool],
        stop_at: usize,
        ops: &mut u64,
    ) -> (usize, Option<LineDesc>) {
        let (w, blk) = self.sites.load(blocked);
        with_coords!(self.sites.frame, |c| best_line(c, &w, &blk, stop_at, ops))
    }

    pub(crate) fn witness(&self, desc: Option<&LineDesc>) -> Witness {
        line_witness(&self.sites, desc)
    }
}

/// Halfplane witness for `desc`, or an empty halfplane left of everything.
pub(crate) fn line_witness(sites: &Sites, desc: Option<&LineDesc>) -> Witness {
    let Some(desc) = desc else {
        let minx = sites
            .locs
            .iter()
            .map(|p| p.x().clone())
            .min()
            .unwrap_or_else(Rational::zero);
        return Witness::Halfplane {
            a: Rational::one(),
            b: Rational::zero(),
            c: minx - Rational::one(),
        };
    };
    let q = sites.rational_coords();
    let [a, b, c] = line_function(&q, desc);
    // Frame point = L * p - shift; {a x' + b y' + c >= 0} as `ax + by <= c`.
    let l = sites.scale();
    let sh = sites.shift();
    Witness::Halfplane {
        a: -(&a * &l),
        b: -(&b * &l),
        c: c - &a * &sh[0] - &b * &sh[1],
    }
}

impl Adversary for HalfplaneAdversary {
    fn solve(&self, blocked: &[bool], stop_at: usize, ops: &mut u64) -> Best {
        let (count, desc) = self.solve_desc(blocked, stop_at, ops);
        let members = match desc {
            None => Vec::new(),
            Some(d) => {
                let chosen = with_coords!(self.sites.frame, |c| line_selection(c, &d));
                self.sites.members(&chosen)
            }
        };
        debug_assert_eq!(members.len(), count);
        Best { count, members }
    }
}
