use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| exact::int(c)).collect(),
        }
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Point { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn x(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn y(&self) -> &Rational {
        &self.coords[1]
    }

    pub(crate) fn expect_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim(),
            });
        }
        Ok(())
    }
}

/// An ordered, dimension-tagged list of points with optional cluster labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    labels: Option<Vec<u32>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        Self::with_labels(dim, points, None)
    }

    pub fn with_labels(dim: usize, points: Vec<Point>, labels: Option<Vec<u32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for p in &points {
            p.expect_dim(dim)?;
        }
        if let Some(l) = &labels {
            if l.len() != points.len() {
                return Err(Error::InvalidParameter(format!(
                    "{} labels for {} points",
                    l.len(),
                    points.len()
                )));
            }
        }
        Ok(PointSet {
            dim,
            points,
            labels,
        })
    }

    pub fn from_ints(dim: usize, pts: &[&[i64]]) -> Result<Self> {
        Self::new(dim, pts.iter().map(|c| Point::from_ints(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn labels(&self) -> Option<&[u32]> {
        self.labels.as_deref()
    }

    pub fn into_parts(self) -> (usize, Vec<Point>, Option<Vec<u32>>) {
        (self.dim, self.points, self.labels)
    }

    pub fn subset(&self, idx: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| idx.iter().map(|&i| l[i]).collect()),
        }
    }

    pub(crate) fn expect_dim(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim,
            });
        }
        Ok(())
    }

    /// First pair of points sharing a coordinate, if any.
    pub fn duplicate_coordinate(&self) -> Option<(usize, usize, usize)> {
        for d in 0..self.dim {
            let mut order: Vec<usize> = (0..self.len()).collect();
            order.sort_by(|&a, &b| self.points[a].coords[d].cmp(&self.points[b].coords[d]));
            for w in order.windows(2) {
                if self.points[w[0]].coords[d] == self.points[w[1]].coords[d] {
                    return Some((d, w[0].min(w[1]), w[0].max(w[1])));
                }
            }
        }
        None
    }

    pub fn has_distinct_coordinates(&self) -> bool {
        self.duplicate_coordinate().is_none()
    }

    pub(crate) fn require_distinct(&self) -> Result<()> {
        match self.duplicate_coordinate() {
            None => Ok(()),
            Some((dim, first, second)) => Err(Error::DuplicateCoordinates { dim, first, second }),
        }
    }
}

/// Vertex indices of a triangle, counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    pub fn contains_vertex(&self, i: usize) -> bool {
        self.a == i || self.b == i || self.c == i
    }
}
