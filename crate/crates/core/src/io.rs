//! JSON encodings of point sets, nets and reports.
//!
//! Coordinates are written as JSON integers when integral and as `"p/q"`
//! strings otherwise; on input, integers, decimal strings and `"p/q"`
//! strings are all accepted exactly.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::net::{Members, Net};

pub fn number_to_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return json!(v);
        }
    }
    Value::String(exact::to_pq(r))
}

pub fn number_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(BigInt::from(i)))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(BigInt::from(u)))
            } else {
                Err(Error::Parse(format!(
                    "non-integer JSON number {n}; write decimals as strings"
                )))
            }
        }
        Value::String(s) => exact::parse_rational(s),
        other => Err(Error::Parse(format!("expected a number, got {other}"))),
    }
}

fn point_to_json(p: &Point) -> Value {
    Value::Array(p.coords.iter().map(number_to_json).collect())
}

fn point_from_json(v: &Value) -> Result<Point> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("a point must be an array".into()))?;
    Ok(Point::new(
        arr.iter().map(number_from_json).collect::<Result<_>>()?,
    ))
}

pub fn pointset_to_json(ps: &PointSet) -> Value {
    let mut v = json!({
        "dim": ps.dim(),
        "points": ps.points().iter().map(point_to_json).collect::<Vec<_>>(),
    });
    if let Some(l) = ps.labels() {
        v["labels"] = json!(l);
    }
    v
}

pub fn pointset_from_json(v: &Value) -> Result<PointSet> {
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("point set needs a positive \"dim\"".into()))?
        as usize;
    if dim == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    let points = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("point set needs \"points\"".into()))?
        .iter()
        .map(point_from_json)
        .collect::<Result<Vec<_>>>()?;
    let labels = match v.get("labels") {
        None | Some(Value::Null) => None,
        Some(l) => Some(
            l.as_array()
                .ok_or_else(|| Error::Parse("labels must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as u32)
                        .ok_or_else(|| Error::Parse("bad label".into()))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    PointSet::with_labels(dim, points, labels)
}

pub fn net_to_json(net: &Net, ps: &PointSet) -> Value {
    let members = match &net.members {
        Members::Strong(v) => json!(v),
        Members::Weak(v) => Value::Array(v.iter().map(point_to_json).collect()),
    };
    json!({
        "family": net.family.tag(),
        "dim": if ps.is_empty() { net.family.dim() } else { ps.dim() },
        "strong": net.is_strong(),
        "members": members,
        "claimed_eps": exact::to_pq(&net.claimed_eps),
    })
}

pub fn net_from_json(v: &Value) -> Result<Net> {
    let tag = v
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("net needs \"family\"".into()))?;
    let dim = v.get("dim").and_then(Value::as_u64).unwrap_or(2) as usize;
    let family = RangeFamily::from_tag(tag, dim)?;
    let strong = v.get("strong").and_then(Value::as_bool).unwrap_or(true);
    let claimed = match v.get("claimed_eps") {
        Some(c) => number_from_json(c)?,
        None => exact::int(1),
    };
    let members = v
        .get("members")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("net needs \"members\"".into()))?;
    if strong {
        let idx = members
            .iter()
            .map(|m| {
                m.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| Error::Parse("strong members are indices".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != idx.len() {
            return Err(Error::InvalidNet("duplicate member index".into()));
        }
        Ok(Net::strong(family, idx, claimed))
    } else {
        let pts = members
            .iter()
            .map(point_from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Net::weak(family, pts, claimed))
    }
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    std::fs::write(path, to_text(v)).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
