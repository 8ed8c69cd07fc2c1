use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use epsnet::builders::*;
use epsnet::generators::{self, GeneratorInstance, Recipe};
use epsnet::geom::PointSet;
use epsnet::oracle::verify::{
    verify_lower_bound_with_budget, verify_weak_lower_bound_sampled_with_budget, DEFAULT_BUDGET,
};
use epsnet::oracle::{oracle_report, Mode, Witness};
use epsnet::table::{run_table, to_csv, to_markdown, Status, TableConfig, TableKind};
use epsnet::{exact, io, render, Error, Net, RangeFamily, Result};

const EXIT_VIOLATED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "epsnet",
    version,
    about = "Build, verify and stress small strong epsilon-nets"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a lower-bound instance as JSON.
    Generate {
        /// One of the generator names, or `compose` with --a and --b.
        name: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        i: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// First part of a composition.
        #[arg(long)]
        a: Option<String>,
        /// Second part of a composition.
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a net for a point set.
    Build {
        points: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        x: usize,
        #[arg(long, default_value_t = 0)]
        y: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Grid parameter for the vertical slabs.
        #[arg(long, default_value_t = 0)]
        kk: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure a net with the exact oracle; fails when it exceeds its claim.
    Verify {
        points: PathBuf,
        net: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum over all nets of a size of the adversary's best range.
    LowerBound {
        /// A generated instance, or a point set with --family and --i.
        input: PathBuf,
        #[arg(long)]
        family: Option<RangeFamily>,
        #[arg(long)]
        i: Option<usize>,
        /// Claimed bound for a bare point set, as `p/q`.
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Clustered)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Search weak nets over this candidate grid instead.
        #[arg(long)]
        weak_resolution: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a bound table as CSV and Markdown.
    Table {
        #[arg(value_parser = parse_table)]
        which: TableKind,
        #[arg(long, default_value_t = TableConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = TableConfig::default().trials)]
        trials: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        md: Option<PathBuf>,
    },
    /// Draw a planar point set, optionally with a net and a range.
    Render {
        points: PathBuf,
        #[arg(long)]
        net: Option<PathBuf>,
        /// A witness, or any report holding one under "witness".
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    BoxCenterpoint,
    Rect,
    Rect2,
    Onept,
    Grid,
    HullWalk,
    Disk2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Clustered,
}

fn parse_table(s: &str) -> std::result::Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A point set file, or the points of a generated instance.
fn load_points(path: &Path) -> Result<(PointSet, Option<GeneratorInstance>)> {
    let v = io::read_json(path)?;
    if v.get("recipe").is_some() {
        let g = GeneratorInstance::from_json(&v)?;
        return Ok((g.point_set.clone(), Some(g)));
    }
    Ok((io::pointset_from_json(&v)?, None))
}

fn generate(
    name: &str,
    k: usize,
    i: usize,
    d: usize,
    a: Option<&str>,
    b: Option<&str>,
) -> Result<GeneratorInstance> {
    if name != "compose" {
        return generators::by_name(name, d, k, i);
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Err(Error::InvalidParameter("compose needs --a and --b".into()));
    };
    let g = generators::compose_far_apart(
        &generators::by_name(a, d, 1, i)?,
        &generators::by_name(b, d, 1, i)?,
    )?;
    match g.recipe {
        Recipe::Compose { .. } if k > 1 => g.recipe.with_multiplicity(k)?.build(),
        _ => Ok(g),
    }
}

fn build(
    ps: &PointSet,
    m: Method,
    i: usize,
    x: usize,
    y: usize,
    j: usize,
    kk: usize,
) -> Result<Net> {
    match m {
        Method::BoxCenterpoint => build_box_strong_centerpoint(ps, ps.dim()),
        Method::Rect => build_rect_net(ps, i),
        Method::Rect2 => build_rect_net2(ps),
        Method::Onept => build_rect_net_onept(ps, x, y),
        Method::Grid => build_rect_net_grid(ps, x, y, j, kk),
        Method::HullWalk => build_halfspace_net(ps, i),
        Method::Disk2 => build_disk_net2(ps),
    }
}

fn witness_from(v: &Value) -> Result<Witness> {
    Witness::from_json(v.get("witness").unwrap_or(v))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Generate {
            name,
            k,
            i,
            d,
            a,
            b,
            out,
        } => {
            let g = generate(&name, k, i, d, a.as_deref(), b.as_deref())?;
            emit(out.as_deref(), &io::to_text(&g.to_json()))?;
            eprintln!(
                "{}: {} points, net size {}, claimed {}",
                g.recipe.name(),
                g.n(),
                g.net_size,
                g.claimed_lower_bound
            );
            Ok(0)
        }
        Cmd::Build {
            points,
            method,
            i,
            x,
            y,
            j,
            kk,
            out,
        } => {
            let (ps, _) = load_points(&points)?;
            let net = build(&ps, method, i, x, y, j, kk)?;
            emit(out.as_deref(), &io::to_text(&io::net_to_json(&net, &ps)))?;
            eprintln!(
                "{} points in the net, claimed {}",
                net.size(),
                net.claimed_eps
            );
            Ok(0)
        }
        Cmd::Verify { points, net, out } => {
            let (ps, _) = load_points(&points)?;
            let net = io::net_from_json(&io::read_json(&net)?)?;
            let r = oracle_report(&ps, &net)?;
            let slack = exact::frac(net.size() as i64 + 4, ps.len() as i64);
            let ok = r.fraction <= &net.claimed_eps + &slack;
            let mut v = r.to_json();
            v["claimed_eps"] = json!(exact::to_pq(&net.claimed_eps));
            v["slack"] = json!(exact::to_pq(&slack));
            v["pass"] = json!(ok);
            emit(out.as_deref(), &io::to_text(&v))?;
            eprintln!(
                "worst avoiding range holds {} of {} points ({:.4}); claimed {} -> {}",
                r.max_count,
                r.n,
                exact::to_f64(&r.fraction),
                exact::to_pq(&net.claimed_eps),
                if ok { "pass" } else { "violated" }
            );
            Ok(if ok { 0 } else { EXIT_VIOLATED })
        }
        Cmd::LowerBound {
            input,
            family,
            i,
            claim,
            mode,
            budget,
            weak_resolution,
            out,
        } => {
            let (ps, g) = load_points(&input)?;
            let family = family
                .or(g.as_ref().map(|g| g.family))
                .ok_or_else(|| Error::InvalidParameter("a bare point set needs --family".into()))?;
            let i = i
                .or(g.as_ref().map(|g| g.net_size))
                .ok_or_else(|| Error::InvalidParameter("a bare point set needs --i".into()))?;
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Clustered if ps.labels().is_some() => Mode::Clustered,
                ModeArg::Clustered => Mode::Exhaustive,
            };
            let r = match weak_resolution {
                Some(res) => {
                    verify_weak_lower_bound_sampled_with_budget(&ps, family, i, res, budget)?
                }
                None => verify_lower_bound_with_budget(&ps, family, i, mode, budget)?,
            };
            let required = match (&claim, &g) {
                (Some(c), _) => Some(
                    (exact::parse_rational(c)? * exact::int(ps.len() as i64))
                        .floor()
                        .to_integer(),
                ),
                (None, Some(g)) => Some((g.required_count() as i64).into()),
                (None, None) => None,
            };
            let ok = required
                .as_ref()
                .is_none_or(|q| num_bigint::BigInt::from(r.max_count) >= *q);
            let mut v = r.to_json(&ps);
            if let Some(q) = &required {
                v["required_count"] = json!(q.to_string());
                v["pass"] = json!(ok);
            }
            emit(out.as_deref(), &io::to_text(&v))?;
            eprintln!(
                "every {i}-point net leaves a range with at least {} of {} points{}",
                r.max_count,
                r.n,
                required.map_or(String::new(), |q| format!(
                    "; required {q} -> {}",
                    if ok { "pass" } else { "violated" }
                ))
            );
            Ok(if ok { 0 } else { EXIT_VIOLATED })
        }
        Cmd::Table {
            which,
            seed,
            budget,
            trials,
            threads,
            csv,
            md,
        } => {
            let cfg = TableConfig {
                seed,
                budget,
                trials,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            let rows = pool.install(|| run_table(which, &cfg))?;
            let text = to_csv(which, &rows, &cfg)?;
            emit(csv.as_deref(), &text)?;
            let markdown = to_markdown(which, &rows, &cfg);
            match md {
                Some(p) => emit(Some(&p), &markdown)?,
                None => eprint!("{markdown}"),
            }
            let worst = rows.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
            Ok(match worst {
                Status::Pass | Status::SlackPass => 0,
                Status::Fail => EXIT_VIOLATED,
                Status::BudgetExceeded => EXIT_BUDGET,
            })
        }
        Cmd::Render {
            points,
            net,
            witness,
            out,
        } => {
            let (ps, g) = load_points(&points)?;
            let net = net
                .map(|p| io::read_json(&p).and_then(|v| io::net_from_json(&v)))
                .transpose()?;
            let mut ws: Vec<(String, Witness)> = g
                .map(|g| {
                    g.witnesses
                        .into_iter()
                        .map(|w| (w.name, w.witness))
                        .collect()
                })
                .unwrap_or_default();
            if let Some(p) = witness {
                ws.push(("witness".into(), witness_from(&io::read_json(&p)?)?));
            }
            emit(out.as_deref(), &render::render_svg(&ps, net.as_ref(), &ws)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            })
        }
    }
}
