use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The range family a net is meant to hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RangeFamily {
    /// Closed axis-parallel boxes in the given dimension.
    Boxes(usize),
    /// Closed planar halfplanes.
    Halfplanes,
    /// Closed planar disks (halfplanes included as limits).
    Disks,
}

impl RangeFamily {
    pub fn dim(&self) -> usize {
        match self {
            RangeFamily::Boxes(d) => *d,
            _ => 2,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            RangeFamily::Boxes(_) => "boxes",
            RangeFamily::Halfplanes => "halfplanes",
            RangeFamily::Disks => "disks",
        }
    }

    pub fn from_tag(tag: &str, dim: usize) -> Result<Self> {
        match tag {
            "boxes" | "rect" | "rectangles" => Ok(RangeFamily::Boxes(dim)),
            "halfplanes" | "halfspaces" => Ok(RangeFamily::Halfplanes),
            "disks" => Ok(RangeFamily::Disks),
            other => Err(Error::Parse(format!("unknown range family {other:?}"))),
        }
    }
}

impl fmt::Display for RangeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RangeFamily::Boxes(d) => write!(f, "boxes({d})"),
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for RangeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("boxes(").and_then(|r| r.strip_suffix(')')) {
            let d = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension in {s:?}")))?;
            return Ok(RangeFamily::Boxes(d));
        }
        RangeFamily::from_tag(s, 2)
    }
}
