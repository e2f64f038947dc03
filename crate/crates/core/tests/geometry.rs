mod common;

use std::collections::BTreeSet;

use okounkov::geom::{convex_hull, inverted_simplex, standard_simplex, Halfspace, Polytope};
use okounkov::{Error, Point, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn pt(c: &[(i64, i64)]) -> Point {
    Point(c.iter().map(|&(n, d)| r(n, d)).collect())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=4).prop_map(|(n, d)| r(n, d))
}

fn cloud(d: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(rational(), d).prop_map(Point), d + 1..d + 8)
}

#[test]
fn planar_hulls_match_gift_wrapping() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let pts = random_cloud(&mut rng, 2, -3, 3);
        let p = convex_hull(&pts).unwrap();
        if !p.is_full_dimensional() {
            continue;
        }
        let got: BTreeSet<Point> = p.vertices().iter().cloned().collect();
        assert_eq!(got, jarvis_march(&pts), "{pts:?}");
    }
}

#[test]
fn spatial_hulls_match_brute_force_facets() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let pts = random_cloud(&mut rng, 3, -2, 2);
        let p = convex_hull(&pts).unwrap();
        if !p.is_full_dimensional() {
            continue;
        }
        let facets = brute_force_facets(&pts);
        let mine: BTreeSet<_> = p.facets().iter().map(|h| normalize(&h.normal, &h.offset)).collect();
        assert_eq!(mine, facets);
        let got: BTreeSet<Point> = p.vertices().iter().cloned().collect();
        assert_eq!(got, vertices_from_facets(&pts, &facets, 3));
    }
}

#[test]
fn lower_dimensional_hulls() {
    // Collinear points in the plane.
    let seg = convex_hull(&[pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (1, 1)]), pt(&[(3, 1), (3, 1)])]).unwrap();
    assert_eq!(seg.vertices().len(), 2);
    assert_eq!(seg.affine_dim(), Some(1));
    assert_eq!(seg.volume(), Rational::zero());
    assert!(seg.contains_point(&pt(&[(2, 1), (2, 1)])).unwrap());
    assert!(!seg.contains_point(&pt(&[(2, 1), (1, 1)])).unwrap());

    // A square lying in a plane of R^3.
    let sq: Vec<Point> = [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(a, b)| pt(&[(a, 1), (b, 1), (1, 1)])).collect();
    let p = convex_hull(&sq).unwrap();
    assert_eq!(p.affine_dim(), Some(2));
    assert_eq!(p.equalities().len(), 1);
    assert_eq!(p.facets().len(), 4);
}

#[test]
fn intersection_examples() {
    let a = convex_hull(&[pt(&[(0, 1)]), pt(&[(2, 1)])]).unwrap();
    let b = convex_hull(&[pt(&[(1, 1)]), pt(&[(3, 1)])]).unwrap();
    assert_eq!(a.intersect(&b).unwrap(), convex_hull(&[pt(&[(1, 1)]), pt(&[(2, 1)])]).unwrap());
    let c = convex_hull(&[pt(&[(5, 1)]), pt(&[(6, 1)])]).unwrap();
    assert!(a.intersect(&c).unwrap().is_empty());
}

#[test]
fn random_intersections_stay_inside_both() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..60 {
        let d = 2 + i % 2;
        let p = convex_hull(&random_cloud(&mut rng, d, -2, 2)).unwrap();
        let q = convex_hull(&random_cloud(&mut rng, d, -2, 2)).unwrap();
        let both = p.intersect(&q).unwrap();
        for v in both.vertices() {
            assert!(in_hull_caratheodory(p.vertices(), v));
            assert!(in_hull_caratheodory(q.vertices(), v));
        }
        // Vertices of one input inside the other lie in the intersection.
        for v in p.vertices().iter().filter(|v| in_hull_caratheodory(q.vertices(), v)) {
            assert!(both.contains_point(v).unwrap());
        }
    }
}

#[test]
fn halfspace_input_errors() {
    let h = |n: Vec<i64>, b: i64| Halfspace::new(n.into_iter().map(|x| r(x, 1)).collect(), r(b, 1));
    assert_eq!(Polytope::from_halfspaces(2, &[h(vec![1, 0], 1), h(vec![0, 1], 1)]), Err(Error::Unbounded));
    let empty = Polytope::from_halfspaces(1, &[h(vec![1], 0), h(vec![-1], -1)]).unwrap();
    assert!(empty.is_empty());
    assert!(matches!(convex_hull(&[]), Err(Error::EmptyInput)));
    assert!(matches!(
        convex_hull(&[Point(vec![r(0, 1); 5])]),
        Err(Error::UnsupportedDimension(5))
    ));
    assert!(matches!(standard_simplex(2, &r(-1, 1)), Err(Error::NegativeSize(_))));
}

#[test]
fn inverted_simplex_membership() {
    // {α >= 0 : α_1 <= λ, α_2 + α_3 <= α_1} with λ = 1/2, probed on a grid.
    let p = inverted_simplex(3, &r(1, 2)).unwrap();
    for a in -1..=5 {
        for b in -1..=5 {
            for c in -1..=5 {
                let x = pt(&[(a, 8), (b, 8), (c, 8)]);
                let inside = a >= 0 && b >= 0 && c >= 0 && a <= 4 && b + c <= a;
                assert_eq!(p.contains_point(&x).unwrap(), inside, "{x}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_is_idempotent(pts in cloud(3)) {
        let p = convex_hull(&pts).unwrap();
        prop_assert_eq!(convex_hull(p.vertices()).unwrap(), p.clone());
        if !p.is_empty() {
            prop_assert_eq!(Polytope::from_halfspaces(3, &p.halfspaces()).unwrap(), p);
        }
    }

    #[test]
    fn simplex_volume(d in 1usize..=4, n in 1i64..=6, den in 1i64..=3) {
        let lambda = r(n, den);
        let mut expected = Rational::one();
        for _ in 0..d {
            expected *= &lambda;
        }
        expected = expected / Rational::factorial(d);
        prop_assert_eq!(standard_simplex(d, &lambda).unwrap().volume(), expected.clone());
        prop_assert_eq!(inverted_simplex(d, &lambda).unwrap().volume(), expected);
    }

    #[test]
    fn volume_is_monotone(pts in cloud(2), extra in cloud(2)) {
        let p = convex_hull(&pts).unwrap();
        let all: Vec<Point> = pts.iter().chain(&extra).cloned().collect();
        let q = convex_hull(&all).unwrap();
        prop_assert!(q.contains(&p).unwrap());
        prop_assert!(q.volume() >= p.volume());
    }

    #[test]
    fn vertex_and_halfspace_views_agree(pts in cloud(2), probes in cloud(2)) {
        let p = convex_hull(&pts).unwrap();
        for x in &probes {
            let by_h = p.halfspaces().iter().all(|h| h.satisfied_by(&x.0));
            prop_assert_eq!(by_h, in_hull_caratheodory(p.vertices(), x));
            prop_assert_eq!(by_h, p.contains_point(x).unwrap());
        }
    }

    #[test]
    fn every_vertex_satisfies_every_halfspace(pts in cloud(3)) {
        let p = convex_hull(&pts).unwrap();
        for v in p.vertices() {
            prop_assert!(p.facets().iter().all(|h| h.satisfied_by(&v.0)));
            prop_assert!(p.equalities().iter().all(|h| h.is_tight(&v.0)));
        }
        for h in p.facets() {
            // Every facet is tight on at least affine_dim vertices.
            let tight = p.vertices().iter().filter(|v| h.is_tight(&v.0)).count();
            prop_assert!(tight >= p.affine_dim().unwrap_or(0));
        }
    }

    #[test]
    fn json_round_trip(pts in cloud(2)) {
        let p = convex_hull(&pts).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polytope>(&s).unwrap(), p);
    }
}
