#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;
use vertex_maximal::{Dual, Point, Polygon};

/// Hull of up to `max_points` uniform points in `[0, side)^2`.
pub fn random_polygon<R: Rng>(rng: &mut R, max_points: usize, side: i64) -> Polygon {
    let count = rng.gen_range(1..=max_points);
    let pts: Vec<Point> = (0..count)
        .map(|_| Point::new(rng.gen_range(0..side), rng.gen_range(0..side)))
        .collect();
    Polygon::convex_hull(&pts).unwrap()
}

/// Smallest `lambda` (scanned in steps of 1/3) with `v` in `lambda * K`,
/// where `K = conv((1,1), (-1,0), (0,-1))`, by exact half-plane tests.
pub fn norm_by_membership(v: Dual) -> Ratio<i64> {
    let k = [(1i64, 1i64), (-1, 0), (0, -1)];
    let (x, y) = (3 * v.p, 3 * v.q);
    if v.is_zero() {
        return Ratio::from_integer(0);
    }
    for t in 1.. {
        // is (x, y) inside t * K?
        let inside = (0..3).all(|i| {
            let (ax, ay) = (t * k[i].0, t * k[i].1);
            let (bx, by) = (t * k[(i + 1) % 3].0, t * k[(i + 1) % 3].1);
            (bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0
        });
        if inside {
            return Ratio::new(t, 3);
        }
    }
    unreachable!()
}

pub type Q = Ratio<i64>;

/// Sum over the three simplex normals of their maxima on a rational point set.
pub fn rational_diameter(points: &[(Q, Q)]) -> Q {
    let fan: [(i64, i64); 3] = [(1, 1), (-1, 0), (0, -1)];
    fan.iter()
        .map(|&(p, q)| {
            points
                .iter()
                .map(|&(x, y)| x * p + y * q)
                .max()
                .unwrap()
        })
        .sum()
}

/// Vertices of `poly` clipped to `a*x + b*y <= c` (Sutherland-Hodgman).
pub fn clip(poly: &[(Q, Q)], a: i64, b: i64, c: Q) -> Vec<(Q, Q)> {
    let f = |&(x, y): &(Q, Q)| x * a + y * b - c;
    let k = poly.len();
    let mut out = Vec::new();
    if k == 1 {
        if f(&poly[0]) <= Q::from_integer(0) {
            out.push(poly[0]);
        }
        return out;
    }
    for i in 0..k {
        let (s, e) = (poly[i], poly[(i + 1) % k]);
        let (fs, fe) = (f(&s), f(&e));
        let zero = Q::from_integer(0);
        if fs <= zero {
            out.push(s);
        }
        if (fs < zero && fe > zero) || (fs > zero && fe < zero) {
            let t = fs / (fs - fe);
            out.push((s.0 + (e.0 - s.0) * t, s.1 + (e.1 - s.1) * t));
        }
    }
    out
}

pub fn rational_vertices(p: &Polygon) -> Vec<(Q, Q)> {
    p.vertices()
        .iter()
        .map(|v| (Q::from_integer(v.x), Q::from_integer(v.y)))
        .collect()
}
