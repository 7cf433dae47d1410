//! Canonicalization of vertex-maximal polygons inside `n * simplex`.
//!
//! Sides of `n * simplex` are handled in the order `y = 0`, `x = 0`,
//! `x + y = n`. Side-specific work is done on the bottom side after a
//! lattice automorphism of `n * simplex` that carries the side there.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::polytope::{hull_vertices, non_vertex_boundary_points_of, orientation, Polytope};
use crate::scalar::Coord;

type Stop<T> = fn(T, LatticePoint<T>) -> bool;

/// The three sides of `n * simplex`, in processing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Bottom,
    Left,
    Hypotenuse,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Bottom, Side::Left, Side::Hypotenuse];

    pub fn contains<T: Coord>(self, n: T, p: LatticePoint<T>) -> bool {
        match self {
            Side::Bottom => p.y.is_zero(),
            Side::Left => p.x.is_zero(),
            Side::Hypotenuse => p.x + p.y == n,
        }
    }

    /// Carries this side onto the bottom side.
    fn to_bottom<T: Coord>(self, n: T, p: LatticePoint<T>) -> LatticePoint<T> {
        match self {
            Side::Bottom => p,
            Side::Left => sigma(n, p),
            Side::Hypotenuse => sigma_inv(n, p),
        }
    }

    fn back_from_bottom<T: Coord>(self, n: T, p: LatticePoint<T>) -> LatticePoint<T> {
        match self {
            Side::Bottom => p,
            Side::Left => sigma_inv(n, p),
            Side::Hypotenuse => sigma(n, p),
        }
    }
}

/// Corner cycle `(0,0) -> (n,0) -> (0,n) -> (0,0)`.
fn sigma<T: Coord>(n: T, p: LatticePoint<T>) -> LatticePoint<T> {
    LatticePoint::new(n - p.x - p.y, p.x)
}

fn sigma_inv<T: Coord>(n: T, p: LatticePoint<T>) -> LatticePoint<T> {
    LatticePoint::new(p.y, n - p.x - p.y)
}

fn on_boundary<T: Coord>(n: T, p: LatticePoint<T>) -> bool {
    Side::ALL.iter().any(|s| s.contains(n, p))
}

fn is_corner<T: Coord>(n: T, p: LatticePoint<T>) -> bool {
    Side::ALL.iter().filter(|s| s.contains(n, p)).count() >= 2
}

fn check_fits<T: Coord>(p: &Polytope<T>, n: T) -> Result<()> {
    let d = p.simplicial_diameter();
    if d > n {
        return Err(Error::DiameterExceeds {
            diameter: d.to_i64().unwrap_or(i64::MAX),
            n: n.to_i64().unwrap_or(i64::MAX),
        });
    }
    Ok(())
}

/// `P + (n - n(P)) * simplex`, which meets every side of `n * simplex`.
pub fn touch_all_edges<T: Coord>(p: &Polytope<T>, n: T) -> Result<Polytope<T>> {
    check_fits(p, n)?;
    let slack = n - p.simplicial_diameter();
    if slack.is_zero() {
        return Ok(p.clone());
    }
    Ok(p.minkowski_sum(&Polytope::dilated_simplex(slack)))
}

/// Vertices on the bottom side, sorted by `x`.
fn bottom_contact<T: Coord>(vs: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let mut c: Vec<_> = vs.iter().copied().filter(|v| v.y.is_zero()).collect();
    c.sort();
    c
}

/// Single-vertex contact with the bottom side: push the arc leaving that
/// vertex one step along the side, keeping everything already present.
fn widen_bottom<T: Coord>(n: T, vs: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let k = vs.len();
    let i0 = vs.iter().position(|v| v.y.is_zero()).expect("contact vertex");
    let v0 = vs[i0];
    let corner = LatticePoint::new(n, T::zero());
    // walk counterclockwise, or clockwise from the right corner
    let (step, shift, stop): (usize, LatticePoint<T>, Stop<T>) = if v0 != corner {
        (1, LatticePoint::new(T::one(), T::zero()), |n, p| p.x.is_zero() || p.x + p.y == n)
    } else {
        (k - 1, LatticePoint::new(-T::one(), T::zero()), |_, p| p.x.is_zero() || p.y.is_zero())
    };
    let mut out = vs.to_vec();
    let mut i = i0;
    loop {
        out.push(vs[i] + shift);
        i = (i + step) % k;
        if i == i0 || stop(n, vs[i]) {
            break;
        }
    }
    hull_vertices(&out)
}

/// Which endpoint of a long bottom contact to keep.
fn keep_left_end<T: Coord>(n: T, vs: &[LatticePoint<T>], a: LatticePoint<T>, b: LatticePoint<T>) -> bool {
    match (is_corner(n, a), is_corner(n, b)) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => {
            // a full side: drop the corner whose other side keeps an edge
            let others = |drop: LatticePoint<T>, side: Side| {
                vs.iter().filter(|&&v| v != drop && side.contains(n, v)).count()
            };
            others(b, Side::Hypotenuse) >= 2 || others(a, Side::Left) < 2
        }
        (false, false) => true,
    }
}

/// Long contact with the bottom side: pull one endpoint to the unit
/// neighbour of the other.
fn shorten_bottom<T: Coord>(n: T, vs: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let c = bottom_contact(vs);
    let (a, b) = (c[0], c[c.len() - 1]);
    let one = LatticePoint::new(T::one(), T::zero());
    let (drop, add) = if keep_left_end(n, vs, a, b) { (b, a + one) } else { (a, b - one) };
    let mut out: Vec<_> = vs.iter().copied().filter(|&v| v != drop).collect();
    out.push(add);
    hull_vertices(&out)
}

fn contact_length<T: Coord>(n: T, vs: &[LatticePoint<T>], side: Side) -> Option<T> {
    let on: Vec<_> = vs.iter().copied().filter(|&v| side.contains(n, v)).collect();
    match on.len() {
        0 => None,
        1 => Some(T::zero()),
        _ => Some((on[0] - on[1]).lattice_length()),
    }
}

/// Whether the polygon meets every side of `n * simplex` in an edge of
/// lattice length one.
pub fn has_unit_contacts<T: Coord>(p: &Polytope<T>, n: T) -> bool {
    Side::ALL
        .iter()
        .all(|&s| contact_length(n, p.vertices(), s) == Some(T::one()))
}

fn on_side<T: Coord>(
    n: T,
    vs: &[LatticePoint<T>],
    side: Side,
    f: impl Fn(T, &[LatticePoint<T>]) -> Vec<LatticePoint<T>>,
) -> Vec<LatticePoint<T>> {
    let moved: Vec<_> = vs.iter().map(|&v| side.to_bottom(n, v)).collect();
    let done = f(n, &hull_vertices(&moved));
    let back: Vec<_> = done.into_iter().map(|v| side.back_from_bottom(n, v)).collect();
    hull_vertices(&back)
}

const MAX_ROUNDS: usize = 16;

/// Both constructions until a fixpoint or the round limit, without
/// insisting on the outcome.
fn unit_boundary_edges_lenient<T: Coord>(p: &Polytope<T>, n: T) -> Polytope<T> {
    let mut vs = p.vertices().to_vec();
    for _ in 0..MAX_ROUNDS {
        let before = vs.clone();
        for side in Side::ALL {
            if contact_length(n, &vs, side) == Some(T::zero()) {
                vs = on_side(n, &vs, side, widen_bottom);
            }
        }
        for side in Side::ALL {
            if contact_length(n, &vs, side).is_some_and(|l| l > T::one()) {
                vs = on_side(n, &vs, side, shorten_bottom);
            }
        }
        if vs == before {
            break;
        }
    }
    Polytope::convex_hull(&vs).expect("non-empty")
}

/// Rebuilds `P` (of diameter exactly `n`) so that it meets each side of
/// `n * simplex` in an edge of lattice length one, without losing vertices.
pub fn unit_boundary_edges<T: Coord>(p: &Polytope<T>, n: T) -> Result<Polytope<T>> {
    if p.simplicial_diameter() != n {
        return Err(Error::Precondition(format!(
            "diameter {} differs from {n}; apply touch_all_edges first",
            p.simplicial_diameter()
        )));
    }
    let out = unit_boundary_edges_lenient(p, n);
    if !has_unit_contacts(&out, n) {
        return Err(Error::UnitContactsUnreachable(format!(
            "no unit contacts on all sides of {n} * simplex reached from {} vertices",
            p.f0()
        )));
    }
    Ok(out)
}

/// One cut: `x` lies inside edge `(v[i], v[i+1])`; drop `v[i]` (cutting
/// along the line through `x` and `v[i-1]`) or, if `forward`, drop
/// `v[i+1]` instead.
fn cut<T: Coord>(vs: &[LatticePoint<T>], i: usize, x: LatticePoint<T>, forward: bool) -> Vec<LatticePoint<T>> {
    let k = vs.len();
    let drop = if forward { (i + 1) % k } else { i };
    let mut out: Vec<_> = (0..k).filter(|&j| j != drop).map(|j| vs[j]).collect();
    out.push(x);
    hull_vertices(&out)
}

fn edge_containing<T: Coord>(vs: &[LatticePoint<T>], x: LatticePoint<T>) -> usize {
    let k = vs.len();
    (0..k)
        .find(|&i| {
            let (a, b) = (vs[i], vs[(i + 1) % k]);
            orientation(a, b, x).is_zero()
                && (x - a).x * (x - b).x <= T::zero()
                && (x - a).y * (x - b).y <= T::zero()
        })
        .expect("boundary point lies on an edge")
}

/// Strip loop on raw vertices. Returns the result and whether every cut
/// avoided the protected vertices.
fn strip_raw<T: Coord>(vs: &[LatticePoint<T>], protected: &[LatticePoint<T>]) -> (Vec<LatticePoint<T>>, bool) {
    let mut vs = hull_vertices(vs);
    if vs.len() == 2 {
        let d = vs[1] - vs[0];
        let len = d.lattice_length();
        let a = if protected.contains(&vs[1]) && !protected.contains(&vs[0]) { vs[1] } else { vs[0] };
        let step = if a == vs[0] { d } else { -d };
        return (hull_vertices(&[a, a + LatticePoint::new(step.x / len, step.y / len)]), true);
    }
    let mut clean = true;
    while let Some(&x) = non_vertex_boundary_points_of(&vs).first() {
        let i = edge_containing(&vs, x);
        let k = vs.len();
        let forward = if protected.contains(&vs[i]) {
            if protected.contains(&vs[(i + 1) % k]) {
                clean = false;
                false
            } else {
                true
            }
        } else {
            false
        };
        vs = cut(&vs, i, x, forward);
    }
    (vs, clean)
}

/// Lattice-point stripping on raw coordinates: the result is a subset of
/// the input hull, counterclockwise from its lexicographically smallest
/// vertex.
pub fn strip_boundary_points_raw<T: Coord>(vertices: &[LatticePoint<T>]) -> Result<Vec<LatticePoint<T>>> {
    if vertices.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    Ok(strip_raw(vertices, &[]).0)
}

/// Same vertex count, and every boundary lattice point is a vertex.
pub fn strip_boundary_points<T: Coord>(p: &Polytope<T>) -> Polytope<T> {
    let vs = strip_raw(p.vertices(), &[]).0;
    Polytope::convex_hull(&vs).expect("non-empty")
}

pub fn boundary_points_are_vertices<T: Coord>(p: &Polytope<T>) -> bool {
    p.non_vertex_boundary_points().is_empty()
}

/// Vertices on each boundary arc between consecutive contact edges,
/// endpoints included; `None` without unit contacts on all sides.
pub fn arc_vertex_counts<T: Coord>(p: &Polytope<T>, n: T) -> Option<[usize; 3]> {
    if !has_unit_contacts(p, n) {
        return None;
    }
    let vs = p.vertices();
    let k = vs.len();
    // the contact edges in counterclockwise order are bottom, hypotenuse, left
    let sides = [Side::Bottom, Side::Hypotenuse, Side::Left];
    let start_of = |s: Side| {
        (0..k)
            .find(|&i| s.contains(n, vs[i]) && s.contains(n, vs[(i + 1) % k]))
            .expect("contact edge")
    };
    let starts = sides.map(start_of);
    let mut counts = [0; 3];
    for j in 0..3 {
        let from = (starts[j] + 1) % k;
        let to = starts[(j + 1) % 3];
        counts[j] = (to + k - from) % k + 1;
    }
    Some(counts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalReport<T> {
    #[serde(skip)]
    pub polytope: Polytope<T>,
    pub n: T,
    pub f0_before: usize,
    pub f0_after: usize,
    pub unit_contacts: bool,
    pub boundary_points_are_vertices: bool,
    /// Every boundary arc carries at least three vertices.
    pub arcs_ok: bool,
}

impl<T> CanonicalReport<T> {
    pub fn both_properties(&self) -> bool {
        self.unit_contacts && self.boundary_points_are_vertices
    }
}

/// `touch_all_edges`, then `unit_boundary_edges`, then stripping with cuts
/// oriented away from the unit contact edges.
///
/// When every arc has at least three vertices both properties are checked
/// and a failure is an error; otherwise the report says which hold.
pub fn canonicalize_maximal<T: Coord>(p: &Polytope<T>, n: T) -> Result<CanonicalReport<T>> {
    let touched = touch_all_edges(p, n)?;
    let unit = unit_boundary_edges_lenient(&touched, n);
    let arcs_ok = arc_vertex_counts(&unit, n).is_some_and(|c| c.iter().all(|&a| a >= 3));
    let protected: Vec<_> = unit
        .vertices()
        .iter()
        .copied()
        .filter(|&v| on_boundary(n, v))
        .collect();
    let (vs, _) = strip_raw(unit.vertices(), &protected);
    let out = Polytope::convex_hull(&vs).expect("non-empty");
    let report = CanonicalReport {
        n,
        f0_before: p.f0(),
        f0_after: out.f0(),
        unit_contacts: has_unit_contacts(&out, n),
        boundary_points_are_vertices: boundary_points_are_vertices(&out),
        arcs_ok,
        polytope: out,
    };
    if arcs_ok && !report.both_properties() {
        return Err(Error::Precondition(format!(
            "canonical form lost a property (unit contacts: {}, boundary points: {})",
            report.unit_contacts, report.boundary_points_are_vertices
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LatticePoint<i64>;

    fn poly(v: &[(i64, i64)]) -> Polytope<i64> {
        Polytope::convex_hull(&v.iter().map(|&(x, y)| P::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    fn hexagon4() -> Polytope<i64> {
        poly(&[(0, 3), (2, 2), (3, 1), (2, 0), (1, 0), (0, 2)])
    }

    #[test]
    fn automorphism_cycles_corners() {
        let n = 5;
        assert_eq!(sigma(n, P::new(0, 0)), P::new(5, 0));
        assert_eq!(sigma(n, P::new(5, 0)), P::new(0, 5));
        assert_eq!(sigma(n, P::new(0, 5)), P::new(0, 0));
        for x in 0..=n {
            for y in 0..=n - x {
                let p = P::new(x, y);
                assert_eq!(sigma_inv(n, sigma(n, p)), p);
                for s in Side::ALL {
                    assert_eq!(s.contains(n, p), Side::Bottom.contains(n, s.to_bottom(n, p)));
                }
            }
        }
    }

    #[test]
    fn touch_examples() {
        assert_eq!(touch_all_edges(&Polytope::<i64>::point(), 1).unwrap(), Polytope::unit_simplex());
        assert_eq!(touch_all_edges(&hexagon4(), 4).unwrap(), hexagon4());
        assert_eq!(
            touch_all_edges(&Polytope::unit_simplex(), 2).unwrap(),
            Polytope::dilated_simplex(2)
        );
        assert!(matches!(
            touch_all_edges(&hexagon4(), 3),
            Err(Error::DiameterExceeds { diameter: 4, n: 3 })
        ));
    }

    #[test]
    fn unit_edges_examples() {
        assert_eq!(unit_boundary_edges(&hexagon4(), 4).unwrap(), hexagon4());
        assert_eq!(
            unit_boundary_edges(&Polytope::unit_simplex(), 1).unwrap(),
            Polytope::unit_simplex()
        );
        // no polygon in 2 * simplex meets all three sides in unit edges
        assert!(matches!(
            unit_boundary_edges(&Polytope::dilated_simplex(2), 2),
            Err(Error::UnitContactsUnreachable(_))
        ));
        assert!(unit_boundary_edges(&Polytope::unit_simplex(), 2).is_err());
    }

    #[test]
    fn unit_edges_on_triangles() {
        for n in 3..=7 {
            let t = Polytope::dilated_simplex(n);
            let out = unit_boundary_edges(&t, n).unwrap();
            assert!(has_unit_contacts(&out, n));
            assert!(out.f0() >= 3);
            assert_eq!(out.simplicial_diameter(), n);
        }
    }

    #[test]
    fn widening_a_single_contact() {
        // single bottom contact at a corner, and in the middle
        for v in [
            poly(&[(0, 0), (1, 1), (0, 3), (2, 1)]),
            poly(&[(1, 0), (0, 1), (0, 3), (3, 0)]),
            poly(&[(2, 0), (0, 2), (1, 3), (3, 1)]),
        ] {
            let n = v.simplicial_diameter();
            let out = unit_boundary_edges(&v, n).unwrap();
            assert!(out.f0() >= v.f0(), "{v:?} -> {out:?}");
            assert!(has_unit_contacts(&out, n));
        }
    }

    #[test]
    fn strip_examples() {
        let raw = strip_boundary_points_raw(&[P::new(0, 0), P::new(2, 0), P::new(0, 1)]).unwrap();
        assert_eq!(raw, vec![P::new(0, 1), P::new(1, 0), P::new(2, 0)]);
        assert_eq!(
            strip_boundary_points(&Polytope::<i64>::unit_simplex()),
            Polytope::unit_simplex()
        );
        let seg = strip_boundary_points_raw(&[P::new(0, 0), P::new(3, 0)]).unwrap();
        assert_eq!(seg, vec![P::new(0, 0), P::new(1, 0)]);
        assert_eq!(strip_boundary_points(&Polytope::<i64>::point()), Polytope::point());
    }

    #[test]
    fn strip_properties() {
        for p in [hexagon4(), Polytope::dilated_simplex(5), poly(&[(0, 0), (6, 0), (6, 4), (0, 2)])] {
            let raw = strip_boundary_points_raw(p.vertices()).unwrap();
            assert!(raw.iter().all(|&v| p.contains(v)));
            let s = strip_boundary_points(&p);
            assert_eq!(s.f0(), p.f0());
            assert!(boundary_points_are_vertices(&s));
            assert_eq!(strip_boundary_points(&s), s);
        }
    }

    #[test]
    fn canonicalize_examples() {
        let r = canonicalize_maximal(&hexagon4(), 4).unwrap();
        assert!(r.f0_after >= 6);
        assert!(r.unit_contacts);
        assert!(r.boundary_points_are_vertices);
        let t = canonicalize_maximal(&Polytope::unit_simplex(), 1).unwrap();
        assert_eq!(t.polytope, Polytope::unit_simplex());
    }

    #[test]
    fn arc_counts_fig1() {
        // contacts (1,0)-(2,0), (3,1)-(2,2), (0,3)-(0,2)
        assert_eq!(arc_vertex_counts(&hexagon4(), 4), Some([2, 2, 2]));
        assert_eq!(arc_vertex_counts(&Polytope::dilated_simplex(3), 3), None);
    }
}
