mod common;

use common::*;
use epsnet::builders::*;
use epsnet::exact;
use epsnet::geom::{delaunay, PointSet};
use epsnet::oracle::oracle_report;
use epsnet::{Net, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn within_slack(ps: &PointSet, net: &Net) -> (bool, Rational) {
    let r = oracle_report(ps, net).unwrap();
    let slack = exact::frac(net.size() as i64 + 4, ps.len() as i64);
    (r.fraction <= &net.claimed_eps + slack, r.fraction)
}

#[test]
fn box_centerpoint_in_every_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for d in 1..=3 {
        for n in [1, 2, 5, 9, 17, 24] {
            let ps = random_points(&mut rng, d, n, 40, true);
            let net = build_box_strong_centerpoint(&ps, d).unwrap();
            let r = oracle_report(&ps, &net).unwrap();
            assert!(
                r.max_count <= n - n.div_ceil(2 * d),
                "d = {d}, n = {n}: {}",
                r.max_count
            );
        }
    }
}

#[test]
fn dominant_point_quadrants() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for n in 1..40 {
        let ps = random_points(&mut rng, 2, n, 60, true);
        let p = ps.point(find_dominant_point(&ps).unwrap()).clone();
        let right = ps.points().iter().filter(|q| q.x() >= p.x()).count();
        let above = ps.points().iter().filter(|q| q.y() >= p.y()).count();
        assert!(right >= n.div_ceil(2) && above >= n.div_ceil(2));
    }
}

#[test]
fn rectangle_nets_by_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in [40, 64, 97] {
        let ps = random_points(&mut rng, 2, n, 200, true);
        for i in 0..=MAX_RECT_SIZE {
            let net = build_rect_net(&ps, i).unwrap();
            assert!(net.size() <= i);
            let (ok, got) = within_slack(&ps, &net);
            assert!(
                ok,
                "n = {n}, i = {i}: measured {got} against {}",
                net.claimed_eps
            );
        }
    }
}

#[test]
fn rectangle_net2_small_inputs_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for n in 1..8 {
        let ps = random_points(&mut rng, 2, n, 20, true);
        let net = build_rect_net2(&ps).unwrap();
        let r = oracle_report(&ps, &net).unwrap();
        assert_eq!(r.fraction, net.claimed_eps);
    }
}

#[test]
fn grid_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let ps = random_points(&mut rng, 2, 100, 300, true);
    for (x, y, j, k) in [(4, 2, 0, 0), (5, 2, 0, 1), (4, 2, 1, 1), (3, 3, 1, 1)] {
        let net = build_rect_net_grid(&ps, x, y, j, k).unwrap();
        let (ok, got) = within_slack(&ps, &net);
        assert!(ok, "grid({x},{y},{j},{k}): {got}");
    }
    assert!(build_rect_net_grid(&ps, 1, 2, 0, 0).is_err());
    assert!(build_rect_net_onept(&ps, 1, 2).is_err());
}

#[test]
fn halfplane_nets_by_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..4 {
        let ps = random_points(&mut rng, 2, 60, 1000, false);
        for i in 1..=6 {
            let net = build_halfspace_net(&ps, i).unwrap();
            assert!(net.size() <= i);
            let r = oracle_report(&ps, &net).unwrap();
            assert!(
                r.max_count * (i + 1) <= 2 * ps.len(),
                "i = {i}: {}",
                r.max_count
            );
        }
    }
}

#[test]
fn disk_net2_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..5 {
        let ps = random_points(&mut rng, 2, 30, 1000, false);
        let c = disk_net2_construction(&ps).unwrap();
        assert_eq!(c.crossings.iter().sum::<usize>(), ps.len() - 3);
        assert!(c.crossings.iter().max().unwrap() * 3 >= ps.len() - 3);
        let tris = delaunay(&ps).unwrap();
        assert!(tris.contains(&c.triangle));
        let r = oracle_report(&ps, &c.net).unwrap();
        assert!(r.max_count * 3 <= 2 * ps.len(), "{}", r.max_count);
    }
}

#[test]
fn halfplane_walk_with_boundary_points() {
    // Every hull start leaves three members after pruning at i = 2.
    let ps = PointSet::from_ints(
        2,
        &[
            &[10, 10],
            &[0, 0],
            &[10, 11],
            &[7, 2],
            &[3, 1],
            &[11, 2],
            &[2, 1],
        ],
    )
    .unwrap();
    let net = build_halfspace_net(&ps, 2).unwrap();
    assert!(net.size() <= 2);
    assert!(oracle_report(&ps, &net).unwrap().max_count <= 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rect_nets_are_subsets_within_budget(seed in any::<u64>(), n in 1usize..50, i in 0usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps = random_points(&mut rng, 2, n, 80, true);
        let net = build_rect_net(&ps, i).unwrap();
        prop_assert!(net.size() <= i);
        prop_assert!(net.indices().unwrap().iter().all(|&k| k < n));
        prop_assert!(within_slack(&ps, &net).0);
    }

    #[test]
    fn halfplane_net_sizes(seed in any::<u64>(), n in 3usize..30, i in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps = random_points(&mut rng, 2, n, 12, false);
        let net = build_halfspace_net(&ps, i).unwrap();
        prop_assert!(net.size() <= i);
        let r = oracle_report(&ps, &net).unwrap();
        prop_assert!(r.fraction <= net.claimed_eps);
    }

    #[test]
    fn disk_net2_bound(seed in any::<u64>(), n in 4usize..16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps = random_points(&mut rng, 2, n, 40, true);
        let net = build_disk_net2(&ps).unwrap();
        prop_assert_eq!(net.size(), 2);
        let r = oracle_report(&ps, &net).unwrap();
        prop_assert!(within_slack(&ps, &net).0, "{} of {}", r.max_count, n);
    }
}
