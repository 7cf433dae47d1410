//! Lattice polygons up to translation.
//!
//! A [`Polytope`] is stored in its canonical representative: vertices in
//! strictly convex position, counterclockwise, starting at the
//! lexicographically smallest vertex, translated so that the minimum `x`
//! and minimum `y` are both zero. Points and segments are allowed.

use crate::error::{Error, Result};
use crate::lattice::{canonical_normal_fan, LatticePoint};
use crate::scalar::Coord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope<T> {
    vertices: Vec<LatticePoint<T>>,
}

/// Sign of the turn `a -> b -> c`; positive for a left turn.
pub fn orientation<T: Coord>(a: LatticePoint<T>, b: LatticePoint<T>, c: LatticePoint<T>) -> T {
    (b - a).cross(c - a)
}

/// Vertices of the convex hull of `points` in counterclockwise order,
/// starting from the lexicographically smallest point, without collinear
/// boundary points. The frame is left untouched.
pub fn hull_vertices<T: Coord>(points: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let zero = T::zero();
    let mut lower: Vec<LatticePoint<T>> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orientation(lower[lower.len() - 2], lower[lower.len() - 1], p) <= zero {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint<T>> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orientation(upper[upper.len() - 2], upper[upper.len() - 1], p) <= zero {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Simplicial diameter of an arbitrary finite point set, together with the
/// translation that moves it into `n * conv((0,0),(1,0),(0,1))`.
///
/// Computed as the sum over the three outer normals of the simplex of their
/// maxima on the point set.
pub fn simplicial_diameter_of_points<T: Coord>(points: &[LatticePoint<T>]) -> (T, LatticePoint<T>) {
    let fan = canonical_normal_fan::<T>();
    let mut total = T::zero();
    for b in fan {
        let m = points
            .iter()
            .map(|&x| b.eval(x))
            .max()
            .expect("non-empty point set");
        total = total + m;
    }
    let min_x = points.iter().map(|p| p.x).min().expect("non-empty point set");
    let min_y = points.iter().map(|p| p.y).min().expect("non-empty point set");
    (total, LatticePoint::new(-min_x, -min_y))
}

impl<T: Coord> Polytope<T> {
    /// Translation-normalized convex hull of a non-empty point set.
    pub fn convex_hull(points: &[LatticePoint<T>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        Ok(Self::from_hull(hull_vertices(points)))
    }

    pub fn point() -> Self {
        Self {
            vertices: vec![LatticePoint::origin()],
        }
    }

    /// `n` times the unit simplex.
    pub fn dilated_simplex(n: T) -> Self {
        let z = T::zero();
        Self::convex_hull(&[
            LatticePoint::new(z, z),
            LatticePoint::new(n, z),
            LatticePoint::new(z, n),
        ])
        .expect("non-empty")
    }

    pub fn unit_simplex() -> Self {
        Self::dilated_simplex(T::one())
    }

    fn from_hull(hull: Vec<LatticePoint<T>>) -> Self {
        let min_x = hull.iter().map(|p| p.x).min().expect("non-empty hull");
        let min_y = hull.iter().map(|p| p.y).min().expect("non-empty hull");
        let shift = LatticePoint::new(min_x, min_y);
        Self {
            vertices: hull.into_iter().map(|p| p - shift).collect(),
        }
    }

    pub fn vertices(&self) -> &[LatticePoint<T>] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn f0(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Directed boundary edges `(start, end)` in counterclockwise order. A
    /// segment yields its two opposite edges; a point yields none.
    pub fn edges(&self) -> Vec<(LatticePoint<T>, LatticePoint<T>)> {
        let k = self.vertices.len();
        if k < 2 {
            return Vec::new();
        }
        (0..k)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    pub fn translate(&self, by: LatticePoint<T>) -> Vec<LatticePoint<T>> {
        self.vertices.iter().map(|&v| v + by).collect()
    }

    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let mut sums = Vec::with_capacity(self.f0() * other.f0());
        for &a in &self.vertices {
            for &b in &other.vertices {
                sums.push(a + b);
            }
        }
        Self::from_hull(hull_vertices(&sums))
    }

    /// Minkowski sum of `k` copies.
    pub fn dilate(&self, k: T) -> Self {
        Self::from_hull(self.vertices.iter().map(|&v| v * k).collect())
    }

    /// Simplicial diameter by summing the maxima of `b1`, `b2`, `b3`, with
    /// the translation placing `self` inside `n * simplex` (always zero for
    /// the canonical representative).
    pub fn simplicial_diameter_maxsum(&self) -> (T, LatticePoint<T>) {
        simplicial_diameter_of_points(&self.vertices)
    }

    pub fn simplicial_diameter(&self) -> T {
        self.simplicial_diameter_maxsum().0
    }

    /// Exact containment test for a point (boundary included).
    pub fn contains(&self, pt: LatticePoint<T>) -> bool {
        points_contain(&self.vertices, pt)
    }

    /// Every lattice point of the polytope, row by row.
    pub fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        lattice_points_of(&self.vertices)
    }

    /// Lattice points on the boundary that are not vertices.
    pub fn non_vertex_boundary_points(&self) -> Vec<LatticePoint<T>> {
        non_vertex_boundary_points_of(&self.vertices)
    }
}

/// Containment in the convex polygon with the given counterclockwise vertices.
pub fn points_contain<T: Coord>(ccw: &[LatticePoint<T>], pt: LatticePoint<T>) -> bool {
    let zero = T::zero();
    match ccw.len() {
        0 => false,
        1 => ccw[0] == pt,
        2 => {
            let (a, b) = (ccw[0], ccw[1]);
            orientation(a, b, pt).is_zero()
                && (pt - a).x * (pt - b).x <= zero
                && (pt - a).y * (pt - b).y <= zero
        }
        k => (0..k).all(|i| orientation(ccw[i], ccw[(i + 1) % k], pt) >= zero),
    }
}

pub fn lattice_points_of<T: Coord>(ccw: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let min_x = ccw.iter().map(|p| p.x).min().expect("non-empty");
    let max_x = ccw.iter().map(|p| p.x).max().expect("non-empty");
    let min_y = ccw.iter().map(|p| p.y).min().expect("non-empty");
    let max_y = ccw.iter().map(|p| p.y).max().expect("non-empty");
    let mut out = Vec::new();
    let mut y = min_y;
    while y <= max_y {
        let mut x = min_x;
        while x <= max_x {
            let pt = LatticePoint::new(x, y);
            if points_contain(ccw, pt) {
                out.push(pt);
            }
            x = x + T::one();
        }
        y = y + T::one();
    }
    out
}

/// Lattice points strictly inside the boundary edges, in lexicographic order.
pub fn non_vertex_boundary_points_of<T: Coord>(ccw: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let k = ccw.len();
    if k < 2 {
        return Vec::new();
    }
    let edge_count = if k == 2 { 1 } else { k };
    let mut out = Vec::new();
    for i in 0..edge_count {
        let (a, b) = (ccw[i], ccw[(i + 1) % k]);
        let d = b - a;
        let len = d.lattice_length();
        let step = LatticePoint::new(d.x / len, d.y / len);
        let mut j = T::one();
        while j < len {
            out.push(a + step * j);
            j = j + T::one();
        }
    }
    out.sort();
    out
}
