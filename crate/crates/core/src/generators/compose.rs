//! Two lower-bound instances placed far apart, sized so that an adversary
//! wins on whichever side receives too few net points.

use num_traits::{ToPrimitive, Zero};

use super::{GeneratorInstance, NamedWitness, Recipe};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::{Point, PointSet};
use crate::oracle::Witness;

/// Composes `g1` and `g2` with net size `i1 + i2` and bound
/// `e1 e2 / (e1 + e2)`.
///
/// Both sides are regenerated at the smallest multiplicities whose point
/// counts are in ratio `e2 : e1`; the inputs' own multiplicities are
/// ignored.
pub fn compose_far_apart(
    g1: &GeneratorInstance,
    g2: &GeneratorInstance,
) -> Result<GeneratorInstance> {
    compatible(g1, g2)?;
    let unit = |g: &GeneratorInstance| -> Result<usize> {
        g.recipe.multiplicity().ok_or_else(|| {
            Error::InvalidParameter(format!(
                "{} has no linear multiplicity to rescale",
                g.recipe.name()
            ))
        })?;
        Ok(g.recipe.with_multiplicity(1)?.build()?.n())
    };
    let (ka, kb) = multiplicities(
        unit(g1)?,
        &g1.claimed_lower_bound,
        unit(g2)?,
        &g2.claimed_lower_bound,
    )?;
    build(&g1.recipe, &g2.recipe, ka, kb, 1)
}

fn compatible(g1: &GeneratorInstance, g2: &GeneratorInstance) -> Result<()> {
    if g1.family != g2.family {
        return Err(Error::FamilyMismatch {
            expected: g1.family.to_string(),
            got: g2.family.to_string(),
        });
    }
    if g1.family == RangeFamily::Halfplanes {
        return Err(Error::InvalidParameter(
            "halfplanes are not compact and cannot be composed".into(),
        ));
    }
    if g1.weak != g2.weak {
        return Err(Error::InvalidParameter(
            "cannot compose a weak bound with a strong one".into(),
        ));
    }
    Ok(())
}

pub(super) fn build(
    a: &Recipe,
    b: &Recipe,
    ka: usize,
    kb: usize,
    k: usize,
) -> Result<GeneratorInstance> {
    if ka == 0 || kb == 0 || k == 0 {
        return Err(Error::InvalidParameter(
            "multiplicities must be positive".into(),
        ));
    }
    let g1 = a.with_multiplicity(ka * k)?.build()?;
    let g2 = b.with_multiplicity(kb * k)?.build()?;
    compatible(&g1, &g2)?;
    let recipe = Recipe::Compose {
        a: Box::new(a.clone()),
        b: Box::new(b.clone()),
        ka,
        kb,
        k,
    };
    join(g1, g2, recipe)
}

/// Sum of the bounding box side lengths, at least the diameter.
fn extent(ps: &PointSet) -> Rational {
    (0..ps.dim())
        .map(|a| {
            let lo = ps.points().iter().map(|p| &p.coords[a]).min().unwrap();
            let hi = ps.points().iter().map(|p| &p.coords[a]).max().unwrap();
            hi - lo
        })
        .sum()
}

/// `p -> 2p + t`; doubling keeps integer sides on distinct parities.
struct Place {
    shift: Vec<Rational>,
}

impl Place {
    fn point(&self, p: &Point) -> Point {
        Point::new(
            p.coords
                .iter()
                .zip(&self.shift)
                .map(|(c, t)| c * exact::int(2) + t)
                .collect(),
        )
    }

    fn witness(&self, w: &Witness) -> Witness {
        let two = exact::int(2);
        match w {
            Witness::Box { lo, hi } => Witness::Box {
                lo: lo
                    .iter()
                    .zip(&self.shift)
                    .map(|(c, t)| c * &two + t)
                    .collect(),
                hi: hi
                    .iter()
                    .zip(&self.shift)
                    .map(|(c, t)| c * &two + t)
                    .collect(),
            },
            Witness::Halfplane { a, b, c } => Witness::Halfplane {
                a: a.clone(),
                b: b.clone(),
                c: c * &two + a * &self.shift[0] + b * &self.shift[1],
            },
            Witness::Disk { center, radius_sq } => Witness::Disk {
                center: self.point(center),
                radius_sq: radius_sq * exact::int(4),
            },
        }
    }
}

fn join(g1: GeneratorInstance, g2: GeneratorInstance, recipe: Recipe) -> Result<GeneratorInstance> {
    let d = g1.point_set.dim();
    let gap = (exact::int(10) * (extent(&g1.point_set) + extent(&g2.point_set))).ceil();
    let max1 = g1
        .point_set
        .points()
        .iter()
        .map(|p| p.x())
        .max()
        .unwrap()
        .clone();
    let min2 = g2
        .point_set
        .points()
        .iter()
        .map(|p| p.x())
        .min()
        .unwrap()
        .clone();
    let left = Place {
        shift: vec![Rational::zero(); d],
    };
    let mut shift = vec![exact::int(1); d];
    shift[0] = (max1 - min2 + gap) * exact::int(2);
    let right = Place { shift };

    let p1: Vec<Point> = g1
        .point_set
        .points()
        .iter()
        .map(|p| left.point(p))
        .collect();
    let p2: Vec<Point> = g2
        .point_set
        .points()
        .iter()
        .map(|p| right.point(p))
        .collect();
    let offset = g1
        .point_set
        .labels()
        .map_or(1, |l| l.iter().max().map_or(0, |&m| m + 1));
    let labels1 = g1
        .point_set
        .labels()
        .map_or_else(|| vec![0; p1.len()], <[u32]>::to_vec);
    let labels2 = g2
        .point_set
        .labels()
        .map_or_else(|| vec![0; p2.len()], <[u32]>::to_vec);

    let mut witnesses = Vec::new();
    for (side, g, place, other) in [("a", &g1, &left, &p2), ("b", &g2, &right, &p1)] {
        for w in &g.witnesses {
            // Halfplanes are not compact; only bounded witnesses carry over.
            if matches!(w.witness, Witness::Halfplane { .. }) {
                continue;
            }
            let moved = place.witness(&w.witness);
            if moved.count_in(other) != 0 {
                return Err(Error::SelfCheck(format!(
                    "witness {} of side {side} reaches the other side",
                    w.name
                )));
            }
            witnesses.push(NamedWitness {
                name: format!("{side}.{}", w.name),
                witness: moved,
                expected: w.expected,
            });
        }
    }

    let labels: Vec<u32> = labels1
        .into_iter()
        .chain(labels2.into_iter().map(|l| l + offset))
        .collect();
    let point_set = PointSet::with_labels(d, p1.into_iter().chain(p2).collect(), Some(labels))?;
    let (e1, e2) = (&g1.claimed_lower_bound, &g2.claimed_lower_bound);
    let claimed_lower_bound = composed_bound(e1, e2);
    GeneratorInstance {
        point_set,
        family: g1.family,
        net_size: g1.net_size + g2.net_size,
        weak: g1.weak,
        claimed_lower_bound,
        slack: g1.slack.max(g2.slack),
        witnesses,
        recipe,
    }
    .self_check()
}

/// `e1 e2 / (e1 + e2)`.
pub fn composed_bound(e1: &Rational, e2: &Rational) -> Rational {
    e1 * e2 / (e1 + e2)
}

/// Smallest multiplicities `(k1, k2)` with `k1 u1 : k2 u2 = e2 : e1`.
pub fn multiplicities(
    u1: usize,
    e1: &Rational,
    u2: usize,
    e2: &Rational,
) -> Result<(usize, usize)> {
    if e1.is_zero() || e2.is_zero() || u1 == 0 || u2 == 0 {
        return Err(Error::InvalidParameter(
            "composition needs positive bounds and sizes".into(),
        ));
    }
    let r = exact::int(u2 as i64) * e2 / (exact::int(u1 as i64) * e1);
    let small = |v: &num_bigint::BigInt| {
        v.to_usize()
            .ok_or_else(|| Error::InvalidParameter("composition multiplicity too large".into()))
    };
    Ok((small(r.numer())?, small(r.denom())?))
}

/// Bound from composing bases in turn; `None` for no bases.
pub fn chain_bound(bases: &[Rational]) -> Option<Rational> {
    let (first, rest) = bases.split_first()?;
    Some(
        rest.iter()
            .fold(first.clone(), |acc, e| composed_bound(&acc, e)),
    )
}

/// Strong box bounds for `i >= 2`: two-point instances, led by one
/// three-point instance when `i` is odd.
pub fn rect_bases(i: usize) -> Vec<(usize, Rational)> {
    if i < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if i % 2 == 1 {
        out.push((3, exact::frac(2, 5)));
    }
    out.extend(std::iter::repeat_n(
        (2, exact::frac(5, 9)),
        (i - 3 * (i % 2)) / 2,
    ));
    out
}

/// Weak disk bounds for `i >= 2`: a three-point instance when `i` is odd,
/// then two-point bounds of `1/2`.
///
/// The two-point base is taken as given; only the three-point base has a
/// generator.
pub fn disk_weak_bases(i: usize) -> Vec<(usize, Rational)> {
    if i < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if i % 2 == 1 {
        out.push((3, exact::frac(1, 3)));
    }
    out.extend(std::iter::repeat_n(
        (2, exact::frac(1, 2)),
        (i - 3 * (i % 2)) / 2,
    ));
    out
}
