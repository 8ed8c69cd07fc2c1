//! Integer frames: a common-denominator rescaling of a planar point list.
//!
//! Scaling by a positive factor and translating preserves the sign of every
//! orientation and in-circle determinant, so predicates can run on integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::kernel::P2;
use super::point::Point;
use crate::error::Result;
use crate::exact::Rational;

/// Coordinate range up to which the `i128` kernel cannot overflow, including
/// the degree-four in-circle determinant.
const SMALL_RANGE: i64 = 1 << 30;

#[derive(Debug, Clone)]
pub enum Coords {
    Small(Vec<P2<i128>>),
    Big(Vec<P2<BigInt>>),
}

#[derive(Debug, Clone)]
pub struct Frame2 {
    /// Positive common denominator: frame = point * scale - shift.
    pub scale: BigInt,
    pub shift: P2<BigInt>,
    pub coords: Coords,
    big: Vec<P2<BigInt>>,
}

/// Runs `$body` with `$c` bound to the frame's coordinate vector, whichever
/// scalar it uses.
#[macro_export]
macro_rules! with_coords {
    ($frame:expr, |$c:ident| $body:expr) => {
        match &$frame.coords {
            $crate::geom::frame::Coords::Small($c) => $body,
            $crate::geom::frame::Coords::Big($c) => $body,
        }
    };
}

impl Frame2 {
    pub fn new<'a, I>(points: I) -> Result<Frame2>
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let pts: Vec<&Point> = points.into_iter().collect();
        for p in &pts {
            p.expect_dim(2)?;
        }
        let mut scale = BigInt::one();
        for p in &pts {
            for c in &p.coords {
                scale = scale.lcm(c.denom());
            }
        }
        let mut big: Vec<P2<BigInt>> = pts
            .iter()
            .map(|p| {
                let f = |r: &Rational| r.numer() * (&scale / r.denom());
                [f(&p.coords[0]), f(&p.coords[1])]
            })
            .collect();
        let shift = if big.is_empty() {
            [BigInt::from(0), BigInt::from(0)]
        } else {
            [
                big.iter().map(|p| p[0].clone()).min().unwrap(),
                big.iter().map(|p| p[1].clone()).min().unwrap(),
            ]
        };
        for p in big.iter_mut() {
            p[0] -= &shift[0];
            p[1] -= &shift[1];
        }
        let small = big.iter().all(|p| {
            p[0].to_i64().is_some_and(|v| v <= SMALL_RANGE)
                && p[1].to_i64().is_some_and(|v| v <= SMALL_RANGE)
        });
        let coords = if small {
            Coords::Small(
                big.iter()
                    .map(|p| [p[0].to_i128().unwrap(), p[1].to_i128().unwrap()])
                    .collect(),
            )
        } else {
            Coords::Big(big.clone())
        };
        Ok(Frame2 {
            scale,
            shift,
            coords,
            big,
        })
    }

    pub fn len(&self) -> usize {
        self.big.len()
    }

    pub fn is_empty(&self) -> bool {
        self.big.is_empty()
    }

    pub fn is_small(&self) -> bool {
        matches!(self.coords, Coords::Small(_))
    }

    pub fn big(&self) -> &[P2<BigInt>] {
        &self.big
    }

    /// Maps a frame coordinate (possibly fractional) back to the input space.
    pub fn unmap(&self, v: &Rational, axis: usize) -> Rational {
        (v + Rational::from_integer(self.shift[axis].clone()))
            / Rational::from_integer(self.scale.clone())
    }

    /// Maps an input-space value into the frame.
    pub fn map(&self, v: &Rational, axis: usize) -> Rational {
        v * Rational::from_integer(self.scale.clone())
            - Rational::from_integer(self.shift[axis].clone())
    }
}
