//! Lower-bound point configurations and the far-apart composition.
//!
//! Every instance is rebuilt from its [`Recipe`], so an instance read back
//! from JSON is regenerated and compared rather than trusted.

mod compose;
mod disk;
mod halfspace;
mod rect;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::io;
use crate::oracle::Witness;

pub use compose::{
    chain_bound, compose_far_apart, composed_bound, disk_weak_bases, multiplicities, rect_bases,
};
pub use disk::gen_disk_weak3_lb;
pub use halfspace::{gen_halfspace2_lb, gen_halfspace_lb};
pub use rect::{
    gen_box_lb, gen_circle_sectors, gen_rect2_lb, gen_rect3_lb, gen_rect4_lb, gen_rect5_lb,
};

/// Parameters of a generator; enough to rebuild the instance exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    BoxLb {
        d: usize,
        k: usize,
    },
    Rect2 {
        k: usize,
    },
    Rect3 {
        k: usize,
    },
    Rect4 {
        k: usize,
    },
    Rect5 {
        k: usize,
    },
    Halfspace {
        i: usize,
        k: usize,
    },
    Halfspace2 {
        k: usize,
    },
    CircleSectors {
        i: usize,
        kk: usize,
    },
    DiskWeak3 {
        k: usize,
    },
    /// `a` at multiplicity `ka * k` next to `b` at multiplicity `kb * k`.
    Compose {
        a: Box<Recipe>,
        b: Box<Recipe>,
        ka: usize,
        kb: usize,
        k: usize,
    },
}

impl Recipe {
    pub fn build(&self) -> Result<GeneratorInstance> {
        match self {
            Recipe::BoxLb { d, k } => gen_box_lb(*d, *k),
            Recipe::Rect2 { k } => gen_rect2_lb(*k),
            Recipe::Rect3 { k } => gen_rect3_lb(*k),
            Recipe::Rect4 { k } => gen_rect4_lb(*k),
            Recipe::Rect5 { k } => gen_rect5_lb(*k),
            Recipe::Halfspace { i, k } => gen_halfspace_lb(*i, *k),
            Recipe::Halfspace2 { k } => gen_halfspace2_lb(*k),
            Recipe::CircleSectors { i, kk } => gen_circle_sectors(*i, *kk),
            Recipe::DiskWeak3 { k } => gen_disk_weak3_lb(*k),
            Recipe::Compose { a, b, ka, kb, k } => compose::build(a, b, *ka, *kb, *k),
        }
    }

    /// Multiplicity, when the point count is proportional to it.
    pub fn multiplicity(&self) -> Option<usize> {
        match self {
            Recipe::BoxLb { k, .. }
            | Recipe::Rect2 { k }
            | Recipe::Rect3 { k }
            | Recipe::Rect4 { k }
            | Recipe::Rect5 { k }
            | Recipe::Halfspace { k, .. }
            | Recipe::Halfspace2 { k }
            | Recipe::DiskWeak3 { k }
            | Recipe::Compose { k, .. } => Some(*k),
            Recipe::CircleSectors { .. } => None,
        }
    }

    /// The same construction at multiplicity `k`.
    pub fn with_multiplicity(&self, k: usize) -> Result<Recipe> {
        let mut r = self.clone();
        match &mut r {
            Recipe::BoxLb { k: m, .. }
            | Recipe::Rect2 { k: m }
            | Recipe::Rect3 { k: m }
            | Recipe::Rect4 { k: m }
            | Recipe::Rect5 { k: m }
            | Recipe::Halfspace { k: m, .. }
            | Recipe::Halfspace2 { k: m }
            | Recipe::DiskWeak3 { k: m }
            | Recipe::Compose { k: m, .. } => *m = k,
            Recipe::CircleSectors { .. } => {
                return Err(Error::InvalidParameter(
                    "circle-sectors has no linear multiplicity".into(),
                ))
            }
        }
        Ok(r)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Recipe::BoxLb { .. } => "box-lb",
            Recipe::Rect2 { .. } => "rect2-lb",
            Recipe::Rect3 { .. } => "rect3-lb",
            Recipe::Rect4 { .. } => "rect4-lb",
            Recipe::Rect5 { .. } => "rect5-lb",
            Recipe::Halfspace { .. } => "halfspace-lb",
            Recipe::Halfspace2 { .. } => "halfspace2-lb",
            Recipe::CircleSectors { .. } => "circle-sectors",
            Recipe::DiskWeak3 { .. } => "disk-weak3-lb",
            Recipe::Compose { .. } => "compose",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = match self {
            Recipe::BoxLb { d, k } => json!({ "d": d, "k": k }),
            Recipe::Rect2 { k }
            | Recipe::Rect3 { k }
            | Recipe::Rect4 { k }
            | Recipe::Rect5 { k } => json!({ "k": k }),
            Recipe::Halfspace { i, k } => json!({ "i": i, "k": k }),
            Recipe::Halfspace2 { k } | Recipe::DiskWeak3 { k } => json!({ "k": k }),
            Recipe::CircleSectors { i, kk } => json!({ "i": i, "kk": kk }),
            Recipe::Compose { a, b, ka, kb, k } => {
                json!({ "a": a.to_json(), "b": b.to_json(), "ka": ka, "kb": kb, "k": k })
            }
        };
        v["name"] = json!(self.name());
        v
    }

    pub fn from_json(v: &Value) -> Result<Recipe> {
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("recipe needs a name".into()))?;
        let num = |key: &str| -> Result<usize> {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("recipe {name:?} needs integer {key:?}")))
        };
        Ok(match name {
            "box-lb" => Recipe::BoxLb {
                d: num("d")?,
                k: num("k")?,
            },
            "rect2-lb" => Recipe::Rect2 { k: num("k")? },
            "rect3-lb" => Recipe::Rect3 { k: num("k")? },
            "rect4-lb" => Recipe::Rect4 { k: num("k")? },
            "rect5-lb" => Recipe::Rect5 { k: num("k")? },
            "halfspace-lb" => Recipe::Halfspace {
                i: num("i")?,
                k: num("k")?,
            },
            "halfspace2-lb" => Recipe::Halfspace2 { k: num("k")? },
            "circle-sectors" => Recipe::CircleSectors {
                i: num("i")?,
                kk: num("kk")?,
            },
            "disk-weak3-lb" => Recipe::DiskWeak3 { k: num("k")? },
            "compose" => Recipe::Compose {
                a: Box::new(Recipe::from_json(
                    v.get("a")
                        .ok_or_else(|| Error::Parse("compose needs \"a\"".into()))?,
                )?),
                b: Box::new(Recipe::from_json(
                    v.get("b")
                        .ok_or_else(|| Error::Parse("compose needs \"b\"".into()))?,
                )?),
                ka: num("ka")?,
                kb: num("kb")?,
                k: num("k")?,
            },
            other => return Err(Error::Parse(format!("unknown generator {other:?}"))),
        })
    }
}

/// A named range used by a lower-bound argument, with the number of points
/// it must contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedWitness {
    pub name: String,
    pub witness: Witness,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorInstance {
    /// Points labelled by cluster.
    pub point_set: PointSet,
    pub family: RangeFamily,
    pub net_size: usize,
    /// Whether the bound is for weak nets.
    pub weak: bool,
    pub claimed_lower_bound: Rational,
    /// Integer-effect allowance `c`: verification must reach
    /// `claimed * n - c` points.
    pub slack: usize,
    pub witnesses: Vec<NamedWitness>,
    pub recipe: Recipe,
}

impl GeneratorInstance {
    pub fn n(&self) -> usize {
        self.point_set.len()
    }

    /// Smallest worst-case count the lower bound promises.
    pub fn required_count(&self) -> usize {
        let exact = &self.claimed_lower_bound * exact::int(self.n() as i64);
        let floor = exact.floor().to_integer();
        usize::try_from(floor)
            .unwrap_or(0)
            .saturating_sub(self.slack)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "recipe": self.recipe.to_json(),
            "family": self.family.tag(),
            "net_size": self.net_size,
            "weak": self.weak,
            "claimed_lower_bound": exact::to_pq(&self.claimed_lower_bound),
            "slack": self.slack,
            "point_set": io::pointset_to_json(&self.point_set),
            "witnesses": self.witnesses.iter().map(|w| json!({
                "name": w.name,
                "expected": w.expected,
                "witness": w.witness.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Rebuilds the instance from its recipe and checks the stored copy.
    pub fn from_json(v: &Value) -> Result<GeneratorInstance> {
        let recipe = Recipe::from_json(
            v.get("recipe")
                .ok_or_else(|| Error::Parse("instance needs a recipe".into()))?,
        )?;
        let g = recipe.build()?;
        let stored = v.get("point_set").map(io::pointset_from_json).transpose()?;
        if stored.is_some_and(|ps| ps != g.point_set) {
            return Err(Error::Parse(
                "stored points differ from the regenerated instance".into(),
            ));
        }
        Ok(g)
    }

    pub(crate) fn self_check(self) -> Result<Self> {
        let n = self.n();
        if n == 0 {
            return Err(Error::SelfCheck("empty instance".into()));
        }
        let zero = exact::int(0);
        if self.claimed_lower_bound <= zero || self.claimed_lower_bound > exact::int(1) {
            return Err(Error::SelfCheck("claimed bound outside (0, 1]".into()));
        }
        if matches!(self.family, RangeFamily::Boxes(_))
            && !self.point_set.has_distinct_coordinates()
        {
            return Err(Error::SelfCheck(
                "box instance with repeated coordinates".into(),
            ));
        }
        for w in &self.witnesses {
            w.witness.check_invariants()?;
            let got = w.witness.count_in(self.point_set.points());
            if got != w.expected {
                return Err(Error::SelfCheck(format!(
                    "{} holds {got} points, expected {}",
                    w.name, w.expected
                )));
            }
        }
        Ok(self)
    }
}

/// Cluster sizes from the labels, indexed by label.
pub fn cluster_sizes(ps: &PointSet) -> Vec<usize> {
    let Some(labels) = ps.labels() else {
        return vec![ps.len()];
    };
    let m = labels.iter().max().map_or(0, |&l| l as usize + 1);
    let mut out = vec![0; m];
    labels.iter().for_each(|&l| out[l as usize] += 1);
    out
}

fn require_equal_clusters(ps: &PointSet, clusters: usize, size: usize) -> Result<()> {
    let sizes = cluster_sizes(ps);
    if sizes.len() != clusters || sizes.iter().any(|&s| s != size) {
        return Err(Error::SelfCheck(format!(
            "cluster sizes {sizes:?}, expected {clusters} of {size}"
        )));
    }
    Ok(())
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

/// Integer point from float coordinates on a grid of the given scale.
fn snap(x: f64, y: f64, scale: f64) -> Point {
    Point::from_ints(&[(x * scale).round() as i64, (y * scale).round() as i64])
}

fn labelled(dim: usize, pts: Vec<Point>, labels: Vec<u32>) -> Result<PointSet> {
    PointSet::with_labels(dim, pts, Some(labels))
}

/// Builds an instance from its recipe by name and parameters, the way the
/// command line names them.
pub fn by_name(name: &str, d: usize, k: usize, i: usize) -> Result<GeneratorInstance> {
    let recipe = match name {
        "box-lb" => Recipe::BoxLb { d, k },
        "rect2-lb" => Recipe::Rect2 { k },
        "rect3-lb" => Recipe::Rect3 { k },
        "rect4-lb" => Recipe::Rect4 { k },
        "rect5-lb" => Recipe::Rect5 { k },
        "halfspace-lb" => Recipe::Halfspace { i, k },
        "halfspace2-lb" => Recipe::Halfspace2 { k },
        "circle-sectors" => Recipe::CircleSectors { i, kk: k },
        "disk-weak3-lb" => Recipe::DiskWeak3 { k },
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown generator {other:?}"
            )))
        }
    };
    recipe.build()
}

/// Names accepted by [`by_name`].
pub const GENERATOR_NAMES: &[&str] = &[
    "box-lb",
    "rect2-lb",
    "rect3-lb",
    "rect4-lb",
    "rect5-lb",
    "halfspace-lb",
    "halfspace2-lb",
    "circle-sectors",
    "disk-weak3-lb",
];
