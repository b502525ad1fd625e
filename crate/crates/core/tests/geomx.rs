mod common;

use algcomb::exactla::RationalMatrix;
use algcomb::geomx::*;
use algcomb::Guards;
use common::{certificate_ok, planar_depth, q, qs, random_config, rank_q};
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn config(d: usize, n: std::ops::Range<usize>) -> impl Strategy<Value = PointConfig> {
    (any::<u64>(), n).prop_map(move |(seed, n)| random_config(&mut algcomb::rng(seed), d, n))
}

fn distinct(p: &PointConfig) -> bool {
    (0..p.len()).all(|i| (0..i).all(|j| p.point(i) != p.point(j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hull_members_get_certificates(p in config(3, 1..9), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = algcomb::rng(seed);
        // a random convex combination is inside; its certificate must reproduce it
        let raw: Vec<i64> = (0..p.len()).map(|_| rng.gen_range(0..5)).collect();
        let total: i64 = raw.iter().sum::<i64>().max(1);
        let target: Vec<BigRational> = (0..3).map(|k| {
            if raw.iter().all(|&w| w == 0) { p.point(0)[k].clone() }
            else { raw.iter().enumerate().map(|(i, &w)| qs(w, total) * &p.point(i)[k]).sum() }
        }).collect();
        let c = hull_membership(&target, &p).unwrap().expect("target is in the hull");
        prop_assert!(certificate_ok(&c, &p, &target));
        let r = caratheodory_reduce(&c, &p).unwrap();
        prop_assert!(certificate_ok(&r, &p, &target) && r.support() <= 4);
        // rank of the lifted support is the support size
        let lifted: Vec<Vec<BigRational>> = r.indices.iter().map(|&i| { let mut v = p.point(i).clone(); v.push(q(1)); v }).collect();
        prop_assert_eq!(rank_q(&lifted), r.support());
    }

    #[test]
    fn far_points_are_outside(p in config(2, 1..8)) {
        prop_assert!(hull_membership(&[q(100), q(0)], &p).unwrap().is_none());
    }

    #[test]
    fn radon_partitions_verify(d in 1usize..4, seed in any::<u64>()) {
        let p = random_config(&mut algcomb::rng(seed), d, d + 2);
        let r = radon_partition(&p).unwrap();
        prop_assert!(!r.left.is_empty() && !r.right.is_empty());
        prop_assert!(r.left.iter().all(|i| !r.right.contains(i) && !r.rest.contains(i)));
        prop_assert_eq!(r.left.len() + r.right.len() + r.rest.len(), p.len());
        prop_assert!(certificate_ok(&r.left_certificate, &p, &r.witness));
        prop_assert!(certificate_ok(&r.right_certificate, &p, &r.witness));
    }

    #[test]
    fn tverberg_partitions_verify(d in 1usize..3, seed in any::<u64>(), r in 2usize..4) {
        let p = random_config(&mut algcomb::rng(seed), d, (r - 1) * (d + 1) + 1);
        let t = tverberg_partition(&p, r, &Guards::default()).unwrap();
        prop_assert!(t.verify(&p));
        for (c, part) in t.certificates.iter().zip(&t.parts) {
            prop_assert!(c.indices.iter().all(|i| part.contains(i)));
            prop_assert!(certificate_ok(c, &p, &t.point));
        }
    }

    #[test]
    fn centerpoint_depth_matches_oracle(p in config(2, 1..12)) {
        let c = centerpoint(&p, &Guards::default()).unwrap();
        let own = planar_depth(&c.point, &p);
        prop_assert_eq!(c.depth, own);
        prop_assert!(own >= p.len().div_ceil(3));
        prop_assert_eq!(halfspace_depth(&c.point, &p).unwrap().depth, own);
    }

    #[test]
    fn halfspace_depth_matches_oracle(p in config(2, 1..10), x in -20i64..20, y in -20i64..20) {
        let pt = [qs(x, 2), qs(y, 3)];
        prop_assert_eq!(halfspace_depth(&pt, &p).unwrap().depth, planar_depth(&pt, &p));
    }

    #[test]
    fn two_distance_counts(p in config(2, 2..7)) {
        prop_assume!(distinct(&p));
        let r = two_distance_check(&p).unwrap();
        let mut ds: Vec<BigRational> = Vec::new();
        for i in 0..p.len() {
            for j in 0..i {
                let d2: BigRational = p.point(i).iter().zip(p.point(j)).map(|(a, b)| (a - b) * (a - b)).sum();
                if !ds.contains(&d2) { ds.push(d2); }
            }
        }
        prop_assert_eq!(r.squared_distances.len(), ds.len());
        prop_assert_eq!(r.is_two_distance, ds.len() <= 2);
    }

    #[test]
    fn sylvester_lines(p in config(2, 3..9)) {
        prop_assume!(distinct(&p));
        let r = sylvester_count(&p, &Guards::default()).unwrap();
        prop_assert!(r.holds);
    }

    #[test]
    fn lp_solutions_are_feasible(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4), x in prop::collection::vec(0i64..4, 4)) {
        let a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        let b: Vec<BigRational> = rows.iter().map(|r| q(r.iter().zip(&x).map(|(u, v)| u * v).sum())).collect();
        let sol = feasible_point(&a, &b).unwrap().expect("x is feasible");
        prop_assert!(sol.iter().all(|v| !v.is_negative()));
        for (r, bi) in a.iter().zip(&b) {
            prop_assert_eq!(&r.iter().zip(&sol).map(|(u, v)| u * v).sum::<BigRational>(), bi);
        }
    }

    #[test]
    fn jl_identity_projection_is_isometric(seed in any::<u64>()) {
        let pts = vec![vec![0.0, 1.0, 2.0], vec![3.0, -1.0, 0.5], vec![1.0, 1.0, 1.0]];
        let r = jl_project(&pts, 3, seed).unwrap();
        prop_assert!((r.max_distortion - 1.0).abs() < 1e-12 && (r.min_distortion - 1.0).abs() < 1e-12);
    }
}

#[test]
fn helly_finds_common_points() {
    let g = Guards::default();
    let tri = |dx: i64| PointConfig::from_i64(2, &[vec![dx, 0], vec![dx + 4, 0], vec![dx, 4]]).unwrap();
    let r = helly_verify(&[tri(0), tri(1), tri(2)], 2, &g).unwrap();
    assert!(r.small_intersections);
    let pt = r.common_point.unwrap();
    for (s, c) in [tri(0), tri(1), tri(2)].iter().zip(&r.certificates) {
        assert!(certificate_ok(c, s, &pt));
    }
    let r = helly_verify(&[tri(0), tri(10), tri(20)], 2, &g).unwrap();
    assert!(!r.small_intersections && r.common_point.is_none());
}

#[test]
fn colourful_transversal() {
    let classes: Vec<PointConfig> = (0..3)
        .map(|k| PointConfig::from_i64(2, &[vec![-1 - k, -1], vec![1 + k, -1], vec![0, 1 + k]]).unwrap())
        .collect();
    let r = colorful_caratheodory(&classes, &[q(0), q(0)], &Guards::default()).unwrap();
    assert!(r.verify(&classes, &[q(0), q(0)]));
}

#[test]
fn joints_on_grids() {
    for n in 1..=3 {
        let (lines, expected) = joints_grid(n);
        assert_eq!(joints(&lines, &Guards::default()).unwrap().joints as u64, expected);
    }
}

#[test]
fn nearly_orthogonal_and_parseval() {
    let g = Guards::default();
    let basis = PointConfig::from_i64(2, &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]).unwrap();
    let r = nearly_orthogonal_check(&basis, &g).unwrap();
    assert!(r.nearly_orthogonal && r.within_bound);
    let e = PointConfig::from_i64(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
    let p = parseval_check(&[q(1), q(2), q(3)], &e).unwrap();
    assert!(p.holds && p.lhs == "5" && p.rhs == "14");
}

#[test]
fn cube_covers_need_n_hyperplanes() {
    let g = Guards::default();
    // x_1 + … + x_n = k for k = 1..n covers every nonzero vertex and misses 0
    for n in 1..=5 {
        let h: Vec<Hyperplane> = (1..=n as i64).map(|k| Hyperplane::from_i64(&vec![1; n], k).unwrap()).collect();
        let r = hyperplane_cover_check(&h, n, &g).unwrap();
        assert!(r.covers && r.misses_origin && r.holds);
        let r = hyperplane_cover_check(&h[..n - 1], n, &g).unwrap();
        assert!(!r.covers);
    }
}

#[test]
fn rank_inequalities_on_random_gram_matrices() {
    let r = jl_rank_checks(8, &qs(1, 10), 5, 40).unwrap();
    assert!(r.jl1_holds && r.jl2_holds);
    let a = RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
    assert!(jl1_check(&a, &qs(1, 2)).unwrap().holds);
    assert!(jl2_check(&a, 0).is_err());
    assert!(radon_partition(&PointConfig::from_i64(2, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap()).is_err());
}
