use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};

/// Members of a net: indices into the source set (strong) or free points (weak).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Members {
    Strong(Vec<usize>),
    Weak(Vec<Point>),
}

/// A candidate epsilon-net together with the epsilon its builder certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Net {
    pub family: RangeFamily,
    pub members: Members,
    pub claimed_eps: Rational,
}

impl Net {
    pub fn strong(family: RangeFamily, mut idx: Vec<usize>, claimed_eps: Rational) -> Self {
        idx.sort_unstable();
        idx.dedup();
        Net {
            family,
            members: Members::Strong(idx),
            claimed_eps,
        }
    }

    pub fn weak(family: RangeFamily, pts: Vec<Point>, claimed_eps: Rational) -> Self {
        Net {
            family,
            members: Members::Weak(pts),
            claimed_eps,
        }
    }

    pub fn empty(family: RangeFamily) -> Self {
        Net::strong(family, Vec::new(), exact::int(1))
    }

    pub fn is_strong(&self) -> bool {
        matches!(self.members, Members::Strong(_))
    }

    pub fn size(&self) -> usize {
        match &self.members {
            Members::Strong(v) => v.len(),
            Members::Weak(v) => v.len(),
        }
    }

    pub fn indices(&self) -> Option<&[usize]> {
        match &self.members {
            Members::Strong(v) => Some(v),
            Members::Weak(_) => None,
        }
    }

    /// The net's points, resolved against `ps` for strong nets.
    pub fn points(&self, ps: &PointSet) -> Vec<Point> {
        match &self.members {
            Members::Strong(v) => v.iter().map(|&i| ps.point(i).clone()).collect(),
            Members::Weak(v) => v.clone(),
        }
    }

    /// Checks indices, duplicates, dimensions and the claimed epsilon.
    pub fn validate(&self, ps: &PointSet) -> Result<()> {
        if !exact::is_probability(&self.claimed_eps) {
            return Err(Error::InvalidNet(format!(
                "claimed_eps {} outside [0,1]",
                exact::to_pq(&self.claimed_eps)
            )));
        }
        if self.family.dim() != ps.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.family.dim(),
                got: ps.dim(),
            });
        }
        match &self.members {
            Members::Strong(v) => {
                let mut seen = v.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != v.len() {
                    return Err(Error::InvalidNet("duplicate member index".into()));
                }
                if let Some(&bad) = v.iter().find(|&&i| i >= ps.len()) {
                    return Err(Error::InvalidNet(format!(
                        "index {bad} out of range for {} points",
                        ps.len()
                    )));
                }
            }
            Members::Weak(v) => {
                for p in v {
                    p.expect_dim(ps.dim())?;
                }
            }
        }
        Ok(())
    }
}
