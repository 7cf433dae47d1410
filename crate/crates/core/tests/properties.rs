mod common;

use common::{clip, norm_by_membership, rational_diameter, rational_vertices, Q};
use num_rational::Ratio;
use proptest::prelude::*;
use vertex_maximal::{d_map, reconstruct, Dual, Point, Polygon, VectorConfiguration};

fn polygon() -> impl Strategy<Value = Polygon> {
    prop::collection::vec((0i64..15, 0i64..15), 1..=12).prop_map(|pts| {
        let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        Polygon::convex_hull(&pts).unwrap()
    })
}

fn dual() -> impl Strategy<Value = Dual> {
    (-40i64..=40, -40i64..=40).prop_map(|(p, q)| Dual::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dmap_roundtrip(p in polygon()) {
        let c = d_map(&p);
        prop_assert!(c.is_balanced());
        prop_assert_eq!(reconstruct(&c).unwrap(), p);
    }

    #[test]
    fn valuation_is_diameter(p in polygon()) {
        let (d, shift) = p.simplicial_diameter_maxsum();
        prop_assert_eq!(d_map(&p).valuation_m(), Ratio::from_integer(d));
        prop_assert_eq!(shift, Point::origin());
    }

    #[test]
    fn merge_is_minkowski_sum(p in polygon(), q in polygon()) {
        let s = p.minkowski_sum(&q);
        prop_assert_eq!(d_map(&s), d_map(&p).merge(&d_map(&q)));
        prop_assert_eq!(s.simplicial_diameter(), p.simplicial_diameter() + q.simplicial_diameter());
    }

    #[test]
    fn dilation_scales_diameter(p in polygon(), k in 1i64..5) {
        prop_assert_eq!(p.dilate(k).simplicial_diameter(), k * p.simplicial_diameter());
    }

    #[test]
    fn valuation_on_convex_unions(p in polygon(), a in -2i64..=2, b in -2i64..=2, c in -20i64..20, w in 0i64..6) {
        prop_assume!(a != 0 || b != 0);
        // P = R cut below a line, Q = R cut above a parallel line; P u Q = R
        let r = rational_vertices(&p);
        let lo = Q::from_integer(c);
        let hi = Q::from_integer(c + w);
        let below = clip(&r, a, b, hi);
        let above = clip(&r, -a, -b, -lo);
        let both = clip(&below, -a, -b, -lo);
        prop_assume!(!below.is_empty() && !above.is_empty() && !both.is_empty());
        prop_assert_eq!(
            rational_diameter(&r) + rational_diameter(&both),
            rational_diameter(&below) + rational_diameter(&above)
        );
    }

    #[test]
    fn norm_matches_membership(v in dual()) {
        prop_assert_eq!(Ratio::from_integer(v.norm()), norm_by_membership(v));
    }

    #[test]
    fn norm_is_a_gauge(v in dual(), w in dual(), k in 0i64..6) {
        prop_assert!(v.norm() >= 0);
        prop_assert_eq!(v.norm() == 0, v.is_zero());
        prop_assert_eq!((v * k).norm(), k * v.norm());
        prop_assert!((v + w).norm() <= v.norm() + w.norm());
        prop_assert_eq!(v.rotate().norm(), v.norm());
        prop_assert_eq!(v.rotate().rotate().rotate(), v);
    }

    #[test]
    fn cone_coordinates_reconstruct(v in dual()) {
        prop_assume!(!v.is_zero());
        let loc = v.cone_index().unwrap();
        let (a, b) = v.cone_coordinates(loc.cone);
        prop_assert!(a > 0 && b >= 0);
        prop_assert_eq!(a + b, v.norm());
    }

    #[test]
    fn configurations_are_order_free(mut vs in prop::collection::vec(dual(), 0..8)) {
        vs.retain(|v| !v.is_zero());
        if let Ok(c) = VectorConfiguration::new(vs.clone()) {
            vs.reverse();
            prop_assert_eq!(VectorConfiguration::new(vs).unwrap(), c);
        }
    }
}
