use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::geom::Point;
use num_traits::Zero;

/// A concrete closed range, in exact input coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Product of closed intervals `[lo_i, hi_i]`.
    Box {
        lo: Vec<Rational>,
        hi: Vec<Rational>,
    },
    /// `a x + b y <= c`.
    Halfplane {
        a: Rational,
        b: Rational,
        c: Rational,
    },
    /// `|p - center|^2 <= radius_sq`.
    Disk { center: Point, radius_sq: Rational },
}

impl Witness {
    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Witness::Box { lo, hi } => p
                .coords
                .iter()
                .zip(lo.iter().zip(hi))
                .all(|(c, (l, h))| l <= c && c <= h),
            Witness::Halfplane { a, b, c } => a * p.x() + b * p.y() <= *c,
            Witness::Disk { center, radius_sq } => {
                let dx = p.x() - center.x();
                let dy = p.y() - center.y();
                &dx * &dx + &dy * &dy <= *radius_sq
            }
        }
    }

    pub fn check_invariants(&self) -> Result<()> {
        match self {
            Witness::Box { lo, hi } => {
                if lo.len() != hi.len() || lo.iter().zip(hi).any(|(l, h)| l > h) {
                    return Err(Error::Defect("box witness with lo > hi".into()));
                }
            }
            Witness::Halfplane { a, b, .. } => {
                if a.is_zero() && b.is_zero() {
                    return Err(Error::Defect("halfplane witness with zero normal".into()));
                }
            }
            Witness::Disk { radius_sq, .. } => {
                if radius_sq < &Rational::zero() {
                    return Err(Error::Defect("disk witness with negative radius".into()));
                }
            }
        }
        Ok(())
    }

    /// How many of `pts` the witness contains.
    pub fn count_in(&self, pts: &[Point]) -> usize {
        pts.iter().filter(|p| self.contains(p)).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pq = |r: &Rational| serde_json::Value::String(exact::to_pq(r));
        match self {
            Witness::Box { lo, hi } => serde_json::json!({
                "kind": "box",
                "lo": lo.iter().map(pq).collect::<Vec<_>>(),
                "hi": hi.iter().map(pq).collect::<Vec<_>>(),
            }),
            Witness::Halfplane { a, b, c } => serde_json::json!({
                "kind": "halfplane", "a": pq(a), "b": pq(b), "c": pq(c),
            }),
            Witness::Disk { center, radius_sq } => serde_json::json!({
                "kind": "disk",
                "center": center.coords.iter().map(pq).collect::<Vec<_>>(),
                "radius_sq": pq(radius_sq),
            }),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Witness> {
        let num = |v: &serde_json::Value| -> Result<Rational> {
            match v {
                serde_json::Value::String(s) => exact::parse_rational(s),
                serde_json::Value::Number(n) => exact::parse_rational(&n.to_string()),
                _ => Err(Error::Parse(
                    "witness number must be a string or integer".into(),
                )),
            }
        };
        let list = |v: &serde_json::Value| -> Result<Vec<Rational>> {
            v.as_array()
                .ok_or_else(|| Error::Parse("expected array".into()))?
                .iter()
                .map(num)
                .collect()
        };
        let kind = v
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| Error::Parse("witness without kind".into()))?;
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("witness missing {k}")))
        };
        match kind {
            "box" => Ok(Witness::Box {
                lo: list(field("lo")?)?,
                hi: list(field("hi")?)?,
            }),
            "halfplane" => Ok(Witness::Halfplane {
                a: num(field("a")?)?,
                b: num(field("b")?)?,
                c: num(field("c")?)?,
            }),
            "disk" => Ok(Witness::Disk {
                center: Point::new(list(field("center")?)?),
                radius_sq: num(field("radius_sq")?)?,
            }),
            other => Err(Error::Parse(format!("unknown witness kind {other:?}"))),
        }
    }
}
