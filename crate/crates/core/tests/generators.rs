use epsnet::exact;
use epsnet::generators::*;
use epsnet::io;
use epsnet::oracle::{verify_lower_bound, verify_weak_lower_bound_sampled, Mode, Witness};
use epsnet::{Error, RangeFamily, Rational};
use proptest::prelude::*;

fn meets_claim(g: &GeneratorInstance) -> usize {
    let r = verify_lower_bound(&g.point_set, g.family, g.net_size, Mode::Clustered).unwrap();
    assert!(
        r.max_count >= g.required_count(),
        "{}: {} of {} below {}",
        g.recipe.name(),
        r.max_count,
        g.n(),
        g.required_count()
    );
    r.max_count
}

#[test]
fn box_instances_are_exact() {
    for (d, k) in [(1, 2), (2, 1), (2, 3), (2, 5), (3, 1), (3, 2)] {
        let g = gen_box_lb(d, k).unwrap();
        assert_eq!(g.n(), 2 * d * k);
        assert_eq!(cluster_sizes(&g.point_set), vec![k; 2 * d]);
        assert_eq!(meets_claim(&g), (2 * d - 1) * k);
    }
}

#[test]
fn rectangle_instances_meet_their_bounds() {
    let cases = [
        (gen_rect2_lb(1).unwrap(), 5),
        (gen_rect2_lb(2).unwrap(), 10),
        (gen_rect3_lb(1).unwrap(), 8),
        (gen_rect4_lb(2).unwrap(), 6),
        (gen_rect5_lb(1).unwrap(), 2),
        (gen_rect5_lb(2).unwrap(), 4),
    ];
    for (g, want) in cases {
        assert_eq!(meets_claim(&g), want, "{}", g.recipe.name());
    }
}

#[test]
fn rectangle_cluster_shapes() {
    assert_eq!(
        cluster_sizes(&gen_rect2_lb(2).unwrap().point_set),
        vec![6; 3]
    );
    assert_eq!(
        cluster_sizes(&gen_rect3_lb(2).unwrap().point_set),
        vec![2; 20]
    );
    assert_eq!(
        cluster_sizes(&gen_rect4_lb(3).unwrap().point_set),
        vec![3; 10]
    );
    assert_eq!(
        cluster_sizes(&gen_rect5_lb(2).unwrap().point_set),
        vec![2; 8]
    );
}

#[test]
fn rect4_needs_its_slack_at_k3() {
    let g = gen_rect4_lb(3).unwrap();
    assert_eq!(g.slack, 1);
    assert_eq!(meets_claim(&g), 8);
}

#[test]
fn halfplane_instances() {
    for (i, k) in [(1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (5, 2), (6, 3)] {
        let g = gen_halfspace_lb(i, k).unwrap();
        let odd = i + 1 - i % 2;
        assert_eq!(g.claimed_lower_bound, exact::frac(2, odd as i64 + 1));
        assert_eq!(cluster_sizes(&g.point_set), vec![2 * k; odd.div_ceil(2)]);
        meets_claim(&g);
    }
    for k in 1..=3 {
        let g = gen_halfspace2_lb(k).unwrap();
        assert_eq!(cluster_sizes(&g.point_set), vec![3 * k, 2 * k]);
        meets_claim(&g);
    }
}

#[test]
fn halfplane_three_point_instance_misses_half_by_one() {
    let g = gen_halfspace_lb(3, 2).unwrap();
    assert_eq!(meets_claim(&g), g.n() / 2 - 1);
}

#[test]
fn circle_sectors() {
    for (i, kk) in [(4, 1), (4, 3), (5, 2), (6, 2)] {
        let g = gen_circle_sectors(i, kk).unwrap();
        assert_eq!(g.n(), i * kk + 1);
        assert_eq!(g.witnesses.len(), i);
        for w in &g.witnesses {
            assert_eq!(w.witness.count_in(g.point_set.points()), kk);
        }
        assert!(meets_claim(&g) >= kk);
    }
    assert!(gen_circle_sectors(3, 2).is_err());
}

#[test]
fn disk_witnesses_hold_a_third() {
    for k in 1..=4 {
        let g = gen_disk_weak3_lb(k).unwrap();
        assert!(g.weak);
        let names: Vec<&str> = g.witnesses.iter().map(|w| w.name.as_str()).collect();
        assert_eq!(names, ["D1", "D2", "D3", "D1'", "H12", "H23"]);
        for w in &g.witnesses {
            assert_eq!(
                w.witness.count_in(g.point_set.points()),
                g.n() / 3,
                "{}",
                w.name
            );
        }
        assert_ne!(g.witnesses[0].witness, g.witnesses[3].witness);
        assert!(matches!(g.witnesses[4].witness, Witness::Halfplane { .. }));
    }
}

#[test]
fn disk_weak_sampled_reaches_a_third() {
    let g = gen_disk_weak3_lb(1).unwrap();
    let r = verify_weak_lower_bound_sampled(&g.point_set, RangeFamily::Disks, 3, 40).unwrap();
    assert!(r.max_count >= g.required_count(), "{}", r.max_count);
}

#[test]
fn sampled_weak_minimum_is_at_most_strong() {
    // The sample contains P, so its minimum is at most the strong one.
    let coords = [
        [3, 17],
        [25, 4],
        [11, 29],
        [40, 13],
        [7, 2],
        [33, 36],
        [19, 21],
        [2, 38],
        [45, 27],
        [28, 9],
        [14, 44],
        [37, 1],
    ];
    let pts: Vec<&[i64]> = coords.iter().map(|c| &c[..]).collect();
    let ps = epsnet::geom::PointSet::from_ints(2, &pts).unwrap();
    let strong = verify_lower_bound(&ps, RangeFamily::Disks, 2, Mode::Exhaustive).unwrap();
    let weak = verify_weak_lower_bound_sampled(&ps, RangeFamily::Disks, 2, 6).unwrap();
    assert!(
        weak.max_count <= strong.max_count,
        "{} > {}",
        weak.max_count,
        strong.max_count
    );
}

#[test]
fn composition_bounds() {
    let r2 = gen_rect2_lb(1).unwrap();
    let r3 = gen_rect3_lb(1).unwrap();
    let r4 = gen_rect4_lb(1).unwrap();
    let r5 = gen_rect5_lb(1).unwrap();
    let pairs = [
        (&r3, &r3, (1, 5)),
        (&r2, &r5, (5, 29)),
        (&r3, &r5, (2, 13)),
        (&r4, &r5, (3, 22)),
        (&r5, &r5, (1, 8)),
    ];
    for (a, b, (p, q)) in pairs {
        let bound = composed_bound(&a.claimed_lower_bound, &b.claimed_lower_bound);
        assert_eq!(bound, exact::frac(p, q));
    }
    let g = compose_far_apart(&r3, &r3).unwrap();
    assert_eq!(g.net_size, 6);
    assert_eq!(g.claimed_lower_bound, exact::frac(1, 5));
    assert!(meets_claim(&g) >= g.n() / 5);

    let g = compose_far_apart(&r2, &r5).unwrap();
    assert_eq!(g.net_size, 7);
    assert_eq!(g.n(), 18 + 40);
    assert_eq!(g.claimed_lower_bound, exact::frac(5, 29));
}

#[test]
fn composition_sides_are_proportional() {
    let r2 = gen_rect2_lb(3).unwrap();
    let r5 = gen_rect5_lb(2).unwrap();
    let g = compose_far_apart(&r2, &r5).unwrap();
    let sizes = cluster_sizes(&g.point_set);
    let left: usize = sizes[..3].iter().sum();
    let right: usize = sizes[3..].iter().sum();
    // left : right = e2 : e1.
    assert_eq!(
        exact::int(left as i64) * &r2.claimed_lower_bound,
        exact::int(right as i64) * &r5.claimed_lower_bound
    );
    assert!(g.point_set.has_distinct_coordinates());
}

#[test]
fn composition_rejections() {
    let h = gen_halfspace_lb(3, 1).unwrap();
    assert!(compose_far_apart(&h, &h).is_err());
    let d = gen_disk_weak3_lb(1).unwrap();
    let r = gen_rect2_lb(1).unwrap();
    assert!(matches!(
        compose_far_apart(&d, &r),
        Err(Error::FamilyMismatch { .. })
    ));
    let s = gen_circle_sectors(4, 1).unwrap();
    assert!(compose_far_apart(&s, &s).is_err());
}

#[test]
fn weak_disk_composition_keeps_bounded_witnesses() {
    let d = gen_disk_weak3_lb(1).unwrap();
    let g = compose_far_apart(&d, &d).unwrap();
    assert!(g.weak);
    assert_eq!(g.net_size, 6);
    assert_eq!(g.claimed_lower_bound, exact::frac(1, 6));
    assert_eq!(g.witnesses.len(), 8);
    for w in &g.witnesses {
        assert_eq!(w.witness.count_in(g.point_set.points()), 2);
    }
}

#[test]
fn induction_chains() {
    for i in 2..=40 {
        let bases = rect_bases(i);
        assert_eq!(bases.iter().map(|b| b.0).sum::<usize>(), i);
        let e: Vec<Rational> = bases.into_iter().map(|b| b.1).collect();
        assert!(
            chain_bound(&e).unwrap() >= exact::frac(10, 9 * i as i64),
            "i = {i}"
        );

        let bases = disk_weak_bases(i);
        assert_eq!(bases.iter().map(|b| b.0).sum::<usize>(), i);
        let e: Vec<Rational> = bases.into_iter().map(|b| b.1).collect();
        assert!(
            chain_bound(&e).unwrap() >= exact::frac(1, i as i64),
            "i = {i}"
        );
    }
    assert_eq!(
        chain_bound(&[exact::frac(5, 9), exact::frac(5, 9)]).unwrap(),
        exact::frac(10, 36)
    );
    let r2 = gen_rect2_lb(1).unwrap();
    let g = compose_far_apart(&r2, &r2).unwrap();
    assert_eq!(g.claimed_lower_bound, exact::frac(10, 36));
    meets_claim(&g);
}

#[test]
fn json_round_trip_is_byte_identical() {
    let r3 = gen_rect3_lb(1).unwrap();
    let all = [
        gen_box_lb(3, 1).unwrap(),
        gen_rect2_lb(2).unwrap(),
        gen_halfspace2_lb(2).unwrap(),
        gen_circle_sectors(4, 3).unwrap(),
        gen_disk_weak3_lb(2).unwrap(),
        compose_far_apart(&r3, &r3).unwrap(),
    ];
    for g in all {
        let text = io::to_text(&g.to_json());
        let back = GeneratorInstance::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(io::to_text(&back.to_json()), text);
    }
}

#[test]
fn tampered_instance_is_rejected() {
    let g = gen_rect2_lb(1).unwrap();
    let mut v = g.to_json();
    v["point_set"]["points"][0][0] = serde_json::json!("12345");
    assert!(GeneratorInstance::from_json(&v).is_err());
    v["recipe"]["name"] = serde_json::json!("nope");
    assert!(GeneratorInstance::from_json(&v).is_err());
}

#[test]
fn lookup_by_name() {
    for name in GENERATOR_NAMES {
        let g = by_name(name, 2, 1, 4).unwrap();
        assert_eq!(g.recipe.name(), *name);
    }
    assert!(by_name("rect9-lb", 2, 1, 4).is_err());
    assert!(gen_rect2_lb(0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn box_bound_is_exact(d in 1usize..=3, k in 1usize..=4) {
        let g = gen_box_lb(d, k).unwrap();
        let r = verify_lower_bound(&g.point_set, g.family, 1, Mode::Clustered).unwrap();
        prop_assert_eq!(r.fraction, g.claimed_lower_bound);
    }

    #[test]
    fn multiplicities_balance(u1 in 1usize..40, u2 in 1usize..40, p1 in 1i64..9, q1 in 1i64..9, p2 in 1i64..9, q2 in 1i64..9) {
        let (e1, e2) = (exact::frac(p1, q1), exact::frac(p2, q2));
        let (k1, k2) = multiplicities(u1, &e1, u2, &e2).unwrap();
        let n1 = exact::int((k1 * u1) as i64);
        let n2 = exact::int((k2 * u2) as i64);
        prop_assert_eq!(n1 * &e1, n2 * &e2);
    }

    #[test]
    fn generators_pass_self_checks(k in 1usize..=6, i in 1usize..=8) {
        for g in [
            gen_rect2_lb(k), gen_rect3_lb(k), gen_rect4_lb(k), gen_rect5_lb(k),
            gen_halfspace_lb(i, k), gen_halfspace2_lb(k), gen_disk_weak3_lb(k),
            gen_circle_sectors(i + 3, k),
        ] {
            let g = g.unwrap();
            prop_assert!(g.claimed_lower_bound > exact::int(0));
            prop_assert!(g.required_count() <= g.n());
        }
    }
}
