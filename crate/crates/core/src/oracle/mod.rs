//! Exact adversaries: the heaviest range of a family that avoids a net.
//!
//! Every report carries an explicit witness range in input coordinates that
//! is re-checked by plain containment before it is returned.

mod boxes;
mod disk;
mod halfplane;
mod sites;
pub mod verify;
pub mod witness;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::geom::PointSet;
use crate::net::{Members, Net};

pub(crate) use boxes::BoxAdversary;
pub(crate) use disk::DiskAdversary;
pub(crate) use halfplane::HalfplaneAdversary;
pub use verify::{verify_lower_bound, verify_weak_lower_bound_sampled, LowerBoundReport, Mode};
pub use witness::Witness;

/// Heaviest avoiding range found by an adversary, as indices into `P`.
pub(crate) struct Best {
    pub(crate) count: usize,
    pub(crate) members: Vec<usize>,
}

/// A family adversary over a fixed point set with per-point blocking.
pub(crate) trait Adversary: Sync {
    /// Best range containing no blocked point; may stop once `stop_at` is
    /// reached. `ops` counts exact predicate evaluations.
    fn solve(&self, blocked: &[bool], stop_at: usize, ops: &mut u64) -> Best;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub max_count: usize,
    pub n: usize,
    pub fraction: Rational,
    pub witness: Witness,
    pub candidates_examined: u64,
}

impl OracleReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "max_count": self.max_count,
            "n": self.n,
            "fraction": exact::to_pq(&self.fraction),
            "witness": self.witness.to_json(),
            "candidates": self.candidates_examined,
        })
    }
}

fn expect_family(net: &Net, ok: bool, expected: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::FamilyMismatch {
            expected: expected.into(),
            got: net.family.to_string(),
        })
    }
}

fn blocked_of(ps: &PointSet, net: &Net) -> Vec<bool> {
    let mut blocked = vec![false; ps.len()];
    if let Members::Strong(idx) = &net.members {
        for &i in idx {
            blocked[i] = true;
        }
    }
    blocked
}

fn weak_points(net: &Net) -> &[crate::geom::Point] {
    match &net.members {
        Members::Weak(v) => v,
        Members::Strong(_) => &[],
    }
}

fn finish(
    ps: &PointSet,
    net: &Net,
    max_count: usize,
    witness: Witness,
    ops: u64,
) -> Result<OracleReport> {
    witness.check_invariants()?;
    let got = witness.count_in(ps.points());
    let hit = witness.count_in(&net.points(ps));
    if got != max_count || hit != 0 {
        return Err(Error::Defect(format!(
            "witness holds {got} points (expected {max_count}) and {hit} net points"
        )));
    }
    Ok(OracleReport {
        max_count,
        n: ps.len(),
        fraction: exact::frac(max_count as i64, ps.len() as i64),
        witness,
        candidates_examined: ops,
    })
}

fn precheck(ps: &PointSet, net: &Net) -> Result<()> {
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    net.validate(ps)
}

/// Largest number of points of `ps` in a closed box containing no net point.
pub fn max_box_avoiding(ps: &PointSet, net: &Net) -> Result<OracleReport> {
    expect_family(net, matches!(net.family, RangeFamily::Boxes(_)), "boxes")?;
    precheck(ps, net)?;
    if !net.is_strong() {
        return Err(Error::InvalidNet(
            "the box adversary needs a strong net".into(),
        ));
    }
    let adv = BoxAdversary::new(ps)?;
    let mut ops = 0;
    let best = adv.solve(&blocked_of(ps, net), usize::MAX, &mut ops);
    finish(ps, net, best.count, adv.witness(&best.members), ops)
}

/// Largest number of points of `ps` in a closed halfplane containing no net point.
pub fn max_halfplane_avoiding(ps: &PointSet, net: &Net) -> Result<OracleReport> {
    expect_family(net, net.family == RangeFamily::Halfplanes, "halfplanes")?;
    precheck(ps, net)?;
    let adv = HalfplaneAdversary::new(ps, weak_points(net))?;
    let mut ops = 0;
    let (count, desc) = adv.solve_desc(&blocked_of(ps, net), usize::MAX, &mut ops);
    finish(ps, net, count, adv.witness(desc.as_ref()), ops)
}

/// Largest number of points of `ps` in a closed disk or halfplane containing
/// no net point.
pub fn max_disk_avoiding(ps: &PointSet, net: &Net) -> Result<OracleReport> {
    expect_family(net, net.family == RangeFamily::Disks, "disks")?;
    precheck(ps, net)?;
    let adv = DiskAdversary::new(ps, weak_points(net))?;
    let mut ops = 0;
    let (count, desc) = adv.solve_desc(&blocked_of(ps, net), usize::MAX, &mut ops);
    finish(ps, net, count, adv.witness(desc.as_ref()), ops)
}

/// Runs the adversary matching the net's family.
pub fn oracle_report(ps: &PointSet, net: &Net) -> Result<OracleReport> {
    match net.family {
        RangeFamily::Boxes(_) => max_box_avoiding(ps, net),
        RangeFamily::Halfplanes => max_halfplane_avoiding(ps, net),
        RangeFamily::Disks => max_disk_avoiding(ps, net),
    }
}

/// The exact epsilon this net achieves on `ps`.
pub fn epsilon_of_net(ps: &PointSet, net: &Net) -> Result<Rational> {
    oracle_report(ps, net).map(|r| r.fraction)
}

/// Adversary for a strong-net family over `ps`.
pub(crate) fn adversary_for<'a>(
    ps: &'a PointSet,
    family: RangeFamily,
) -> Result<Box<dyn Adversary + 'a>> {
    if family.dim() != ps.dim() {
        return Err(Error::DimensionMismatch {
            expected: family.dim(),
            got: ps.dim(),
        });
    }
    Ok(match family {
        RangeFamily::Boxes(_) => Box::new(BoxAdversary::new(ps)?),
        RangeFamily::Halfplanes => Box::new(HalfplaneAdversary::new(ps, &[])?),
        RangeFamily::Disks => Box::new(DiskAdversary::new(ps, &[])?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn square() -> PointSet {
        PointSet::from_ints(2, &[&[0, 0], &[4, 1], &[1, 4], &[5, 5], &[2, 2]]).unwrap()
    }

    #[test]
    fn empty_net_takes_everything() {
        let ps = square();
        for fam in [
            RangeFamily::Boxes(2),
            RangeFamily::Halfplanes,
            RangeFamily::Disks,
        ] {
            let r = oracle_report(&ps, &Net::empty(fam)).unwrap();
            assert_eq!(r.max_count, 5, "{fam}");
        }
    }

    #[test]
    fn full_net_leaves_nothing() {
        let ps = square();
        for fam in [
            RangeFamily::Boxes(2),
            RangeFamily::Halfplanes,
            RangeFamily::Disks,
        ] {
            let net = Net::strong(fam, (0..5).collect(), frac(0, 1));
            assert_eq!(epsilon_of_net(&ps, &net).unwrap(), frac(0, 1));
        }
    }

    #[test]
    fn center_point_blocks_box_quadrants() {
        let ps = square();
        let net = Net::strong(RangeFamily::Boxes(2), vec![4], frac(1, 1));
        let r = max_box_avoiding(&ps, &net).unwrap();
        assert_eq!(r.max_count, 2);
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let ps = square();
        let net = Net::empty(RangeFamily::Disks);
        assert!(matches!(
            max_halfplane_avoiding(&ps, &net),
            Err(Error::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn coincident_net_point_blocks_location() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[0, 0], &[3, 0]]).unwrap();
        let net = Net::strong(RangeFamily::Halfplanes, vec![0], frac(1, 1));
        assert_eq!(max_halfplane_avoiding(&ps, &net).unwrap().max_count, 1);
        let net = Net::strong(RangeFamily::Disks, vec![0], frac(1, 1));
        assert_eq!(max_disk_avoiding(&ps, &net).unwrap().max_count, 1);
    }

    #[test]
    fn weak_net_point_between_collinear_points() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[2, 0], &[4, 0], &[6, 0]]).unwrap();
        let net = Net::weak(
            RangeFamily::Halfplanes,
            vec![crate::geom::Point::from_ints(&[3, 0])],
            frac(1, 1),
        );
        assert_eq!(max_halfplane_avoiding(&ps, &net).unwrap().max_count, 2);
        let net = Net::weak(
            RangeFamily::Disks,
            vec![crate::geom::Point::from_ints(&[3, 0])],
            frac(1, 1),
        );
        assert_eq!(max_disk_avoiding(&ps, &net).unwrap().max_count, 2);
    }
}
