//! Planar sites: the points of `P` followed by free net points, merged into
//! distinct locations so that coincident points share one predicate value.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::Rational;
use crate::geom::frame::Frame2;
use crate::geom::kernel::P2;
use crate::geom::Point;

pub(crate) struct Sites {
    pub(crate) locs: Vec<Point>,
    pub(crate) frame: Frame2,
    loc_of: Vec<usize>,
    n_p: usize,
}

impl Sites {
    pub(crate) fn new(p: &[Point], extra: &[Point]) -> Result<Sites> {
        let mut index: HashMap<&Point, usize> = HashMap::new();
        let mut locs = Vec::new();
        let mut loc_of = Vec::with_capacity(p.len() + extra.len());
        for pt in p.iter().chain(extra) {
            let next = locs.len();
            let l = *index.entry(pt).or_insert(next);
            if l == next {
                locs.push(pt.clone());
            }
            loc_of.push(l);
        }
        let frame = Frame2::new(&locs)?;
        Ok(Sites {
            locs,
            frame,
            loc_of,
            n_p: p.len(),
        })
    }

    /// Location weights (free points of `P`) and blocked flags.
    ///
    /// A location is blocked if any net point sits on it.
    pub(crate) fn load(&self, blocked_p: &[bool]) -> (Vec<usize>, Vec<bool>) {
        let mut w = vec![0usize; self.locs.len()];
        let mut blk = vec![false; self.locs.len()];
        for (s, &l) in self.loc_of.iter().enumerate() {
            if s >= self.n_p || blocked_p[s] {
                blk[l] = true;
            } else {
                w[l] += 1;
            }
        }
        (w, blk)
    }

    /// Indices of `P` sitting on chosen locations.
    pub(crate) fn members(&self, chosen: &[bool]) -> Vec<usize> {
        (0..self.n_p).filter(|&i| chosen[self.loc_of[i]]).collect()
    }

    /// Frame coordinates as rationals, for witness construction.
    pub(crate) fn rational_coords(&self) -> Vec<P2<Rational>> {
        let r = |v: &BigInt| Rational::from_integer(v.clone());
        self.frame
            .big()
            .iter()
            .map(|p| [r(&p[0]), r(&p[1])])
            .collect()
    }

    pub(crate) fn unmap(&self, p: &P2<Rational>) -> Point {
        Point::xy(self.frame.unmap(&p[0], 0), self.frame.unmap(&p[1], 1))
    }

    pub(crate) fn scale(&self) -> Rational {
        Rational::from_integer(self.frame.scale.clone())
    }

    pub(crate) fn shift(&self) -> P2<Rational> {
        let s = &self.frame.shift;
        [
            Rational::from_integer(s[0].clone()),
            Rational::from_integer(s[1].clone()),
        ]
    }
}
