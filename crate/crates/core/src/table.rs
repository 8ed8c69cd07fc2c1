//! Reproduction of the bound tables: every row runs a generator against the
//! exhaustive verifier for its lower bound and a builder against the oracle
//! on seeded random sets for its upper bound.
//!
//! Rows are independent and may run in parallel; each row seeds its own
//! generator from the table seed and its position, so output does not
//! depend on scheduling.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::builders::{
    build_box_strong_centerpoint, build_disk_net2, build_halfspace_net, build_rect_net,
    rect_upper_bound,
};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::family::RangeFamily;
use crate::generators::{self as gen, GeneratorInstance};
use crate::geom::{Point, PointSet};
use crate::net::Net;
use crate::oracle::verify::verify_lower_bound_with_budget;
use crate::oracle::{oracle_report, Mode, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Lower and upper bounds for boxes, nets of size 1 to 10.
    Rect,
    /// Boxes, halfplanes and disks, nets of size 1 to 3.
    Summary,
}

impl std::str::FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rect" => Ok(TableKind::Rect),
            "summary" => Ok(TableKind::Summary),
            other => Err(Error::Parse(format!(
                "unknown table {other:?}; expected rect or summary"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TableConfig {
    pub seed: u64,
    /// Predicate budget for each exhaustive lower-bound search.
    pub budget: u64,
    /// Random point sets per upper-bound row.
    pub trials: usize,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            seed: 2024,
            budget: crate::oracle::verify::DEFAULT_BUDGET,
            trials: 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    SlackPass,
    Fail,
    /// The lower-bound search ran out of budget.
    BudgetExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::SlackPass => "slack-pass",
            Status::Fail => "fail",
            Status::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub i: usize,
    pub family: RangeFamily,
    pub paper_lb: Rational,
    pub paper_ub: Rational,
    pub measured_lb: Option<Rational>,
    /// Worst oracle fraction over the random sets.
    pub measured_ub: Rational,
    /// Lower-bound instance name and size.
    pub lb_source: String,
    pub instance_n: usize,
    pub lb_slack: usize,
    pub ub_source: String,
    pub ub_n: usize,
    pub status: Status,
    /// For failing rows: the range behind the failure.
    pub witness: Option<Witness>,
}

/// How a lower bound is measured.
struct LbSpec {
    instance: fn() -> Result<GeneratorInstance>,
    /// Verify against this family instead of the instance's own.
    family: Option<RangeFamily>,
}

#[derive(Clone, Copy)]
enum UbMethod {
    BoxCenterpoint,
    Rect,
    HullWalk,
    DiskSingle,
    Disk2,
}

struct RowSpec {
    i: usize,
    family: RangeFamily,
    paper_lb: Rational,
    paper_ub: Rational,
    lb: LbSpec,
    ub: UbMethod,
    ub_claim: Rational,
    ub_n: usize,
}

fn rect_lb(i: usize) -> LbSpec {
    let instance: fn() -> Result<GeneratorInstance> = match i {
        1 => || gen::gen_box_lb(2, 5),
        2 => || gen::gen_rect2_lb(2),
        3 => || gen::gen_rect3_lb(1),
        4 => || gen::gen_rect4_lb(2),
        5 => || gen::gen_rect5_lb(2),
        6 => || gen::compose_far_apart(&gen::gen_rect3_lb(1)?, &gen::gen_rect3_lb(1)?),
        7 => || gen::compose_far_apart(&gen::gen_rect2_lb(1)?, &gen::gen_rect5_lb(1)?),
        8 => || gen::compose_far_apart(&gen::gen_rect3_lb(1)?, &gen::gen_rect5_lb(1)?),
        9 => || gen::compose_far_apart(&gen::gen_rect4_lb(1)?, &gen::gen_rect5_lb(1)?),
        _ => || gen::compose_far_apart(&gen::gen_rect5_lb(1)?, &gen::gen_rect5_lb(1)?),
    };
    LbSpec {
        instance,
        family: None,
    }
}

/// Smallest multiple of the bound's denominator that is at least 64.
fn ub_size(claim: &Rational) -> usize {
    let den = usize::try_from(claim.denom()).unwrap_or(1);
    den * 64usize.div_ceil(den)
}

const RECT_LB: [(i64, i64); 10] = [
    (3, 4),
    (5, 9),
    (2, 5),
    (3, 10),
    (1, 4),
    (1, 5),
    (5, 29),
    (2, 13),
    (3, 22),
    (1, 8),
];
const RECT_UB: [(i64, i64); 10] = [
    (3, 4),
    (5, 8),
    (9, 16),
    (1, 2),
    (15, 32),
    (15, 32),
    (3, 7),
    (2, 5),
    (5, 13),
    (3, 8),
];

fn rect_row(i: usize) -> RowSpec {
    let (ub, ub_claim) = if i == 1 {
        (UbMethod::BoxCenterpoint, exact::frac(3, 4))
    } else {
        (UbMethod::Rect, rect_upper_bound(i))
    };
    RowSpec {
        i,
        family: RangeFamily::Boxes(2),
        paper_lb: exact::frac(RECT_LB[i - 1].0, RECT_LB[i - 1].1),
        paper_ub: exact::frac(RECT_UB[i - 1].0, RECT_UB[i - 1].1),
        lb: rect_lb(i),
        ub,
        ub_n: ub_size(&ub_claim),
        ub_claim,
    }
}

fn halfplane_lb(i: usize, family: RangeFamily) -> LbSpec {
    let instance: fn() -> Result<GeneratorInstance> = match i {
        1 => || gen::gen_halfspace_lb(1, 2),
        2 => || gen::gen_halfspace2_lb(2),
        _ => || gen::gen_halfspace_lb(3, 2),
    };
    LbSpec {
        instance,
        family: Some(family),
    }
}

fn summary_rows() -> Vec<RowSpec> {
    let mut rows = Vec::new();
    for i in 1..=3 {
        rows.push(rect_row(i));
    }
    let hp_lb = [(1, 1), (3, 5), (1, 2)];
    let hp_ub = [(1, 1), (2, 3), (1, 2)];
    for i in 1..=3 {
        rows.push(RowSpec {
            i,
            family: RangeFamily::Halfplanes,
            paper_lb: exact::frac(hp_lb[i - 1].0, hp_lb[i - 1].1),
            paper_ub: exact::frac(hp_ub[i - 1].0, hp_ub[i - 1].1),
            lb: halfplane_lb(i, RangeFamily::Halfplanes),
            ub: UbMethod::HullWalk,
            ub_claim: exact::frac(2, i as i64 + 1),
            ub_n: 60,
        });
    }
    let disk_ub = [(1, 1), (2, 3), (2, 3)];
    for i in 1..=3 {
        rows.push(RowSpec {
            i,
            family: RangeFamily::Disks,
            paper_lb: exact::frac(hp_lb[i - 1].0, hp_lb[i - 1].1),
            paper_ub: exact::frac(disk_ub[i - 1].0, disk_ub[i - 1].1),
            lb: halfplane_lb(i, RangeFamily::Disks),
            ub: if i == 1 {
                UbMethod::DiskSingle
            } else {
                UbMethod::Disk2
            },
            ub_claim: exact::frac(disk_ub[i - 1].0, disk_ub[i - 1].1),
            ub_n: 30,
        });
    }
    rows
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, distinct: bool) -> Result<PointSet> {
    let span = 20 * n as i64;
    let pts: Vec<Point> = if distinct {
        let mut xs: Vec<i64> = (0..span).collect();
        let mut ys = xs.clone();
        let (xs, _) = xs.partial_shuffle(rng, n);
        let (ys, _) = ys.partial_shuffle(rng, n);
        xs.iter()
            .zip(ys.iter())
            .map(|(&x, &y)| Point::from_ints(&[x, y]))
            .collect()
    } else {
        let mut seen = std::collections::HashSet::new();
        std::iter::from_fn(|| {
            Some(Point::from_ints(&[
                rng.gen_range(0..span),
                rng.gen_range(0..span),
            ]))
        })
        .filter(|p| seen.insert(p.clone()))
        .take(n)
        .collect()
    };
    PointSet::new(2, pts)
}

fn build_ub(method: UbMethod, ps: &PointSet, i: usize) -> Result<Net> {
    match method {
        UbMethod::BoxCenterpoint => build_box_strong_centerpoint(ps, 2),
        UbMethod::Rect => build_rect_net(ps, i),
        UbMethod::HullWalk => build_halfspace_net(ps, i),
        UbMethod::DiskSingle => Ok(Net::strong(RangeFamily::Disks, vec![0], exact::int(1))),
        UbMethod::Disk2 => build_disk_net2(ps),
    }
}

fn ub_name(method: UbMethod) -> &'static str {
    match method {
        UbMethod::BoxCenterpoint => "box-centerpoint",
        UbMethod::Rect => "rect",
        UbMethod::HullWalk => "hull-walk",
        UbMethod::DiskSingle => "single-point",
        UbMethod::Disk2 => "disk2",
    }
}

fn run_row(spec: &RowSpec, index: usize, cfg: &TableConfig) -> Result<TableRow> {
    let g = (spec.lb.instance)()?;
    if g.claimed_lower_bound != spec.paper_lb {
        return Err(Error::Defect(format!(
            "row {} instance claims {}",
            spec.i, g.claimed_lower_bound
        )));
    }
    let family = spec.lb.family.unwrap_or(g.family);
    let n = g.n();
    let lb_slack = exact::frac(g.slack as i64, n as i64);
    let (measured_lb, mut status, mut witness) = match verify_lower_bound_with_budget(
        &g.point_set,
        family,
        spec.i,
        Mode::Clustered,
        cfg.budget,
    ) {
        Ok(r) => {
            let status = if r.fraction >= spec.paper_lb {
                Status::Pass
            } else if r.fraction >= &spec.paper_lb - &lb_slack {
                Status::SlackPass
            } else {
                Status::Fail
            };
            let w = (status == Status::Fail).then(|| r.witness.clone());
            (Some(r.fraction), status, w)
        }
        Err(Error::BudgetExceeded { .. }) => (None, Status::BudgetExceeded, None),
        Err(e) => return Err(e),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(
        cfg.seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15),
    );
    let distinct = matches!(spec.family, RangeFamily::Boxes(_));
    let mut measured_ub = exact::int(0);
    let mut ub_status = Status::Pass;
    for _ in 0..cfg.trials {
        let ps = random_set(&mut rng, spec.ub_n, distinct)?;
        let net = build_ub(spec.ub, &ps, spec.i)?;
        let r = oracle_report(&ps, &net)?;
        let slack = exact::frac(net.size() as i64 + 4, spec.ub_n as i64);
        let s = if r.fraction <= spec.ub_claim {
            Status::Pass
        } else if r.fraction <= &spec.ub_claim + slack {
            Status::SlackPass
        } else {
            Status::Fail
        };
        if s == Status::Fail && witness.is_none() {
            witness = Some(r.witness.clone());
        }
        ub_status = ub_status.max(s);
        if r.fraction > measured_ub {
            measured_ub = r.fraction;
        }
    }
    status = status.max(ub_status);
    Ok(TableRow {
        i: spec.i,
        family: spec.family,
        paper_lb: spec.paper_lb.clone(),
        paper_ub: spec.paper_ub.clone(),
        measured_lb,
        measured_ub,
        lb_source: g.recipe.name().to_string(),
        instance_n: n,
        lb_slack: g.slack,
        ub_source: ub_name(spec.ub).to_string(),
        ub_n: spec.ub_n,
        status,
        witness,
    })
}

/// Runs every row of the table.
pub fn run_table(kind: TableKind, cfg: &TableConfig) -> Result<Vec<TableRow>> {
    let specs = match kind {
        TableKind::Rect => (1..=10).map(rect_row).collect(),
        TableKind::Summary => summary_rows(),
    };
    specs
        .par_iter()
        .enumerate()
        .map(|(k, s)| run_row(s, k, cfg))
        .collect()
}

const COLUMNS: [&str; 16] = [
    "table",
    "i",
    "family",
    "paper_lb",
    "measured_lb",
    "lb_source",
    "instance_n",
    "lb_slack",
    "paper_ub",
    "measured_ub",
    "ub_source",
    "ub_n",
    "trials",
    "status",
    "seed",
    "witness",
];

fn fields(kind: TableKind, r: &TableRow, cfg: &TableConfig) -> [String; 16] {
    [
        match kind {
            TableKind::Rect => "rect".into(),
            TableKind::Summary => "summary".into(),
        },
        r.i.to_string(),
        r.family.to_string(),
        exact::to_pq(&r.paper_lb),
        r.measured_lb
            .as_ref()
            .map_or_else(String::new, exact::to_pq),
        r.lb_source.clone(),
        r.instance_n.to_string(),
        r.lb_slack.to_string(),
        exact::to_pq(&r.paper_ub),
        exact::to_pq(&r.measured_ub),
        r.ub_source.clone(),
        r.ub_n.to_string(),
        cfg.trials.to_string(),
        r.status.to_string(),
        cfg.seed.to_string(),
        r.witness
            .as_ref()
            .map_or_else(String::new, |w| w.to_json().to_string()),
    ]
}

pub fn to_csv(kind: TableKind, rows: &[TableRow], cfg: &TableConfig) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(COLUMNS).map_err(io)?;
    for r in rows {
        w.write_record(fields(kind, r, cfg)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_markdown(kind: TableKind, rows: &[TableRow], cfg: &TableConfig) -> String {
    let shown = [1, 2, 3, 4, 6, 8, 9, 11, 13];
    let mut out = String::new();
    let line = |cells: Vec<&str>| format!("| {} |\n", cells.join(" | "));
    out += &line(shown.iter().map(|&c| COLUMNS[c]).collect());
    out += &line(shown.iter().map(|_| "---").collect());
    for r in rows {
        let f = fields(kind, r, cfg);
        out += &line(shown.iter().map(|&c| f[c].as_str()).collect());
    }
    out += &format!(
        "\nseed {}, {} random sets per upper bound\n",
        cfg.seed, cfg.trials
    );
    out
}
