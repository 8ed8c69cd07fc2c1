//! Independent brute-force references shared by the integration suites.
//!
//! Nothing here calls into the library's adversaries: boxes are checked by
//! subset realizability, halfplanes and disks by strict linear separability
//! (after the paraboloid lift for disks) decided with Fourier-Motzkin
//! elimination over integers.
#![allow(dead_code)]

use epsnet::geom::{Point, PointSet};
use epsnet::oracle::Witness;
use epsnet::{exact, Rational};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

/// Integer coordinates of a point with integral coordinates.
pub fn ints(p: &Point) -> Vec<i128> {
    p.coords
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "reference oracles take integer points");
            c.to_integer().try_into().unwrap()
        })
        .collect()
}

fn normalize(mut r: Vec<i128>) -> Vec<i128> {
    let g = r.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        r.iter_mut().for_each(|v| *v /= g);
    }
    r
}

/// Whether `rows[k] . v > 0` for all `k` has a solution `v`.
pub fn strictly_feasible(rows: &[Vec<i128>]) -> bool {
    let Some(dim) = rows.first().map(|r| r.len()) else {
        return true;
    };
    let mut cur: Vec<Vec<i128>> = rows.iter().cloned().map(normalize).collect();
    for var in 0..dim {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in cur {
            match r[var].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => keep.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p[var], -q[var]);
                let comb: Vec<i128> = p.iter().zip(q).map(|(x, y)| x * b + y * a).collect();
                keep.push(normalize(comb));
            }
        }
        keep.sort();
        keep.dedup();
        if keep.iter().any(|r| r.iter().all(|&v| v == 0)) {
            return false;
        }
        cur = keep;
    }
    cur.is_empty()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

/// Largest `S` whose bounding box holds no other point and no net point.
pub fn ref_box(ps: &PointSet, net: &[Point]) -> usize {
    let pts = ps.points();
    let mut best = 0;
    for s in subsets(pts.len()) {
        let chosen: Vec<&Point> = pts
            .iter()
            .zip(&s)
            .filter(|(_, &c)| c)
            .map(|(p, _)| p)
            .collect();
        if chosen.len() <= best {
            continue;
        }
        let d = ps.dim();
        let lo: Vec<&Rational> = (0..d)
            .map(|a| chosen.iter().map(|p| &p.coords[a]).min().unwrap())
            .collect();
        let hi: Vec<&Rational> = (0..d)
            .map(|a| chosen.iter().map(|p| &p.coords[a]).max().unwrap())
            .collect();
        let inside = |q: &Point| (0..d).all(|a| lo[a] <= &q.coords[a] && &q.coords[a] <= hi[a]);
        let leaks = pts.iter().zip(&s).any(|(q, &c)| !c && inside(q)) || net.iter().any(inside);
        if !leaks {
            best = chosen.len();
        }
    }
    best
}

fn separable(inside: &[Vec<i128>], outside: &[Vec<i128>], lift: bool) -> bool {
    // Halfplane: a x + b y - c < 0 inside, > 0 outside, unknowns (a, b, c).
    let mut rows = Vec::new();
    for p in inside {
        rows.push(vec![-p[0], -p[1], 1]);
    }
    for p in outside {
        rows.push(vec![p[0], p[1], -1]);
    }
    if strictly_feasible(&rows) {
        return true;
    }
    if !lift {
        return false;
    }
    // Disk: t (x^2 + y^2) + a x + b y + c < 0 inside, > 0 outside, t > 0.
    let sq = |p: &Vec<i128>| p[0] * p[0] + p[1] * p[1];
    let mut rows = vec![vec![1, 0, 0, 0]];
    for p in inside {
        rows.push(vec![-sq(p), -p[0], -p[1], -1]);
    }
    for p in outside {
        rows.push(vec![sq(p), p[0], p[1], 1]);
    }
    strictly_feasible(&rows)
}

fn ref_separable(ps: &PointSet, net: &[Point], lift: bool) -> usize {
    let pts: Vec<Vec<i128>> = ps.points().iter().map(ints).collect();
    let blockers: Vec<Vec<i128>> = net.iter().map(ints).collect();
    let mut best = 0;
    for s in subsets(pts.len()) {
        let k = s.iter().filter(|&&c| c).count();
        if k <= best {
            continue;
        }
        let inside: Vec<Vec<i128>> = pts
            .iter()
            .zip(&s)
            .filter(|(_, &c)| c)
            .map(|(p, _)| p.clone())
            .collect();
        let mut outside: Vec<Vec<i128>> = pts
            .iter()
            .zip(&s)
            .filter(|(_, &c)| !c)
            .map(|(p, _)| p.clone())
            .collect();
        outside.extend(blockers.iter().cloned());
        if separable(&inside, &outside, lift) {
            best = k;
        }
    }
    best
}

/// Largest subset cut out by a closed halfplane containing no net point.
pub fn ref_halfplane(ps: &PointSet, net: &[Point]) -> usize {
    ref_separable(ps, net, false)
}

/// Largest subset cut out by a closed disk or halfplane containing no net point.
pub fn ref_disk(ps: &PointSet, net: &[Point]) -> usize {
    ref_separable(ps, net, true)
}

/// Containment re-check written against the witness fields directly.
pub fn ref_contains(w: &Witness, p: &Point) -> bool {
    match w {
        Witness::Box { lo, hi } => {
            (0..lo.len()).all(|a| lo[a] <= p.coords[a] && p.coords[a] <= hi[a])
        }
        Witness::Halfplane { a, b, c } => a * &p.coords[0] + b * &p.coords[1] <= *c,
        Witness::Disk { center, radius_sq } => {
            let dx = &p.coords[0] - &center.coords[0];
            let dy = &p.coords[1] - &center.coords[1];
            &dx * &dx + &dy * &dy <= *radius_sq
        }
    }
}

/// Random integer point set; with `distinct`, each axis is a permutation.
pub fn random_points(
    rng: &mut impl Rng,
    dim: usize,
    n: usize,
    span: i64,
    distinct: bool,
) -> PointSet {
    let mut axes: Vec<Vec<i64>> = Vec::new();
    for _ in 0..dim {
        if distinct {
            let mut vals: Vec<i64> = (0..span.max(n as i64)).collect();
            vals.shuffle(rng);
            vals.truncate(n);
            axes.push(vals);
        } else {
            axes.push((0..n).map(|_| rng.gen_range(0..span)).collect());
        }
    }
    let pts = (0..n)
        .map(|i| Point::new((0..dim).map(|a| exact::int(axes[a][i])).collect()))
        .collect();
    PointSet::new(dim, pts).unwrap()
}

pub fn random_net(rng: &mut impl Rng, n: usize, max: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx.truncate(rng.gen_range(0..=max.min(n)));
    idx.sort_unstable();
    idx
}

/// One pass/fail line in the acceptance format.
pub fn report(id: &str, ok: bool, detail: &str) -> bool {
    println!("[{}] {id}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}
