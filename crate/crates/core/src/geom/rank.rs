use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::point::{Point, PointSet};
use crate::error::Result;
use crate::exact::{self, Rational};

/// Per-point, per-dimension ranks (ties broken by point index).
#[allow(clippy::needless_range_loop)]
pub fn ranks(ps: &PointSet) -> Vec<Vec<usize>> {
    let n = ps.len();
    let mut out = vec![vec![0usize; ps.dim()]; n];
    for d in 0..ps.dim() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            ps.point(a).coords[d]
                .cmp(&ps.point(b).coords[d])
                .then(a.cmp(&b))
        });
        for (r, i) in order.into_iter().enumerate() {
            out[i][d] = r;
        }
    }
    out
}

/// Replaces every coordinate by its rank in its dimension.
///
/// The result has distinct coordinates and is order-isomorphic, per
/// dimension, to an infinitesimal perturbation of the input.
pub fn rank_normalize(ps: &PointSet) -> PointSet {
    let r = ranks(ps);
    let points = r
        .iter()
        .map(|row| Point::new(row.iter().map(|&v| exact::int(v as i64)).collect()))
        .collect();
    PointSet::with_labels(ps.dim(), points, ps.labels().map(|l| l.to_vec()))
        .expect("ranks preserve shape")
}

/// Deterministic order-preserving jitter.
///
/// Each coordinate moves by less than `g / (2 n^2)`, where `g` is the smallest
/// gap between distinct values in its dimension, so strict coordinate order
/// is kept and ties are broken pseudo-randomly from `seed`.
pub fn jitter(ps: &PointSet, seed: u64) -> Result<PointSet> {
    let n = ps.len() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::with_capacity(ps.dim());
    for d in 0..ps.dim() {
        let mut vals: Vec<&Rational> = ps.points().iter().map(|p| &p.coords[d]).collect();
        vals.sort();
        vals.dedup();
        let gap = vals
            .windows(2)
            .map(|w| w[1] - w[0])
            .min()
            .unwrap_or_else(|| exact::int(1));
        steps.push(gap / exact::int(2 * n * n * 1000));
    }
    let points = ps
        .points()
        .iter()
        .map(|p| {
            Point::new(
                p.coords
                    .iter()
                    .zip(&steps)
                    .map(|(c, step)| c + step * exact::int(rng.gen_range(-999..=999)))
                    .collect(),
            )
        })
        .collect();
    PointSet::with_labels(ps.dim(), points, ps.labels().map(|l| l.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tie_broken_by_index() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[0, 1]]).unwrap();
        let r = rank_normalize(&ps);
        assert_eq!(r.point(0), &Point::from_ints(&[0, 0]));
        assert_eq!(r.point(1), &Point::from_ints(&[1, 1]));
        assert!(r.has_distinct_coordinates());
    }

    #[test]
    fn idempotent_and_monotone() {
        let ps = PointSet::from_ints(2, &[&[5, -3], &[2, 8], &[9, 1]]).unwrap();
        let r = rank_normalize(&ps);
        assert_eq!(rank_normalize(&r), r);
        assert_eq!(r.point(0), &Point::from_ints(&[1, 0]));
        assert_eq!(r.point(1), &Point::from_ints(&[0, 2]));
    }

    #[test]
    fn jitter_keeps_strict_order() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[0, 1], &[1, 1], &[3, 0]]).unwrap();
        let j = jitter(&ps, 7).unwrap();
        for d in 0..2 {
            for a in 0..4 {
                for b in 0..4 {
                    if ps.point(a).coords[d] < ps.point(b).coords[d] {
                        assert!(j.point(a).coords[d] < j.point(b).coords[d]);
                    }
                }
            }
        }
        assert_eq!(jitter(&ps, 7).unwrap(), j);
    }
}
