//! The rank-2 lattice, its dual, and the asymmetric norm whose unit ball is
//! the triangle spanned by the outer normals of the unimodular simplex.
//!
//! Everything is expressed in the canonical frame where the simplex is
//! `conv((0,0), (1,0), (0,1))`. A dual vector `(p, q)` acts on a lattice
//! point by `p*x + q*y`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Coord> LatticePoint<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    /// Cross product of `self` and `other` viewed as vectors.
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    /// Lattice length of the vector, i.e. gcd of its coordinates.
    pub fn lattice_length(self) -> T {
        self.x.gcd(&self.y)
    }

    /// Lifts to a representative in `Z^3` modulo `(1,1,1)`, using the chart
    /// `e1 -> (1,0)`, `e2 -> (-1,1)`, `e3 -> (0,-1)`.
    pub fn to_triple(self) -> [T; 3] {
        // (x, y) = u1*(1,0) + u2*(-1,1) with u3 = 0
        [self.x + self.y, self.y, T::zero()]
    }

    pub fn from_triple(u: [T; 3]) -> Self {
        Self::new(u[0] - u[1], u[1] - u[2])
    }
}

impl<T: Coord> Add for LatticePoint<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Coord> Sub for LatticePoint<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Coord> Neg for LatticePoint<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Coord> Mul<T> for LatticePoint<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<T: fmt::Display> fmt::Display for LatticePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Element of the dual lattice, in coordinates dual to the canonical frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualVector<T> {
    pub p: T,
    pub q: T,
}

/// One of the three closed cones `C_i = cone(b_j, b_k)` of the face fan of
/// the norm's unit ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cone {
    C1,
    C2,
    C3,
}

impl Cone {
    pub fn index(self) -> usize {
        match self {
            Cone::C1 => 1,
            Cone::C2 => 2,
            Cone::C3 => 3,
        }
    }
}

/// Result of locating a nonzero dual vector in the half-open cone partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeLocation {
    pub cone: Cone,
    /// `false` when the vector sits on the included boundary ray `b_j`.
    pub interior: bool,
}

impl<T: Coord> DualVector<T> {
    pub fn new(p: T, q: T) -> Self {
        Self { p, q }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn is_zero(self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn eval(self, pt: LatticePoint<T>) -> T {
        self.p * pt.x + self.q * pt.y
    }

    pub fn cross(self, o: Self) -> T {
        self.p * o.q - self.q * o.p
    }

    pub fn dot(self, o: Self) -> T {
        self.p * o.p + self.q * o.q
    }

    /// `true` when both vectors are nonzero and point in the same direction.
    pub fn same_direction(self, o: Self) -> bool {
        !self.is_zero() && !o.is_zero() && self.cross(o).is_zero() && self.dot(o) > T::zero()
    }

    /// The asymmetric norm: the Minkowski functional of `conv(b1, b2, b3)`.
    ///
    /// Maximum of the three facet functionals of the unit ball. Their sum is
    /// zero, so the maximum is never negative.
    pub fn norm(self) -> T {
        let two = T::two();
        let f12 = two * self.q - self.p;
        let f23 = -self.p - self.q;
        let f31 = two * self.p - self.q;
        f12.max(f23).max(f31)
    }

    pub fn lattice_length(self) -> T {
        self.p.gcd(&self.q)
    }

    pub fn is_primitive(self) -> bool {
        self.lattice_length().is_one()
    }

    pub fn primitive_part(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.lattice_length();
        Ok(Self::new(self.p / g, self.q / g))
    }

    /// The order-3 symmetry `b1 -> b2 -> b3 -> b1`.
    pub fn rotate(self) -> Self {
        Self::new(-self.q, self.p - self.q)
    }

    /// Coordinates `w` with `w1 + w2 + w3 = 0`, where `w_i` is the value on
    /// the image of `e_i`. In this view the norm is the largest of the cyclic
    /// differences `w1 - w2`, `w2 - w3`, `w3 - w1`.
    pub fn to_triple(self) -> [T; 3] {
        [self.p, self.q - self.p, -self.q]
    }

    pub fn from_triple(w: [T; 3]) -> Result<Self> {
        if !(w[0] + w[1] + w[2]).is_zero() {
            return Err(Error::Precondition(format!(
                "dual triple ({}, {}, {}) does not sum to zero",
                w[0], w[1], w[2]
            )));
        }
        Ok(Self::new(w[0], -w[2]))
    }

    /// Locates `self` in the half-open cone `C~_i`, which keeps the ray of
    /// `b_j` and drops the ray of `b_k` for `(i, j, k)` cyclic.
    pub fn cone_index(self) -> Result<ConeLocation> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let zero = T::zero();
        let (p, q) = (self.p, self.q);
        // C1 = cone(b2, b3): coordinates (c2, c3) = (-p, -q)
        // C2 = cone(b3, b1): coordinates (c3, c1) = (p - q, p)
        // C3 = cone(b1, b2): coordinates (c1, c2) = (q, q - p)
        let candidates = [
            (Cone::C1, -p, -q),
            (Cone::C2, p - q, p),
            (Cone::C3, q, q - p),
        ];
        for (cone, lead, trail) in candidates {
            if lead > zero && trail >= zero {
                return Ok(ConeLocation {
                    cone,
                    interior: trail > zero,
                });
            }
        }
        unreachable!("half-open cones cover every nonzero dual vector")
    }

    /// Coordinates `(c_j, c_k)` of `self` in the basis `(b_j, b_k)` of the
    /// given cone. Both are non-negative exactly when `self` lies in the cone.
    pub fn cone_coordinates(self, cone: Cone) -> (T, T) {
        let (p, q) = (self.p, self.q);
        match cone {
            Cone::C1 => (-p, -q),
            Cone::C2 => (p - q, p),
            Cone::C3 => (q, q - p),
        }
    }
}

impl<T: Coord> Add for DualVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.p + o.p, self.q + o.q)
    }
}

impl<T: Coord> AddAssign for DualVector<T> {
    fn add_assign(&mut self, o: Self) {
        self.p = self.p + o.p;
        self.q = self.q + o.q;
    }
}

impl<T: Coord> Sub for DualVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.p - o.p, self.q - o.q)
    }
}

impl<T: Coord> Neg for DualVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p, -self.q)
    }
}

impl<T: Coord> Mul<T> for DualVector<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.p * k, self.q * k)
    }
}

impl<T: fmt::Display> fmt::Display for DualVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `(b1, b2, b3)`: the primitive outer normals of the unit simplex.
pub fn canonical_normal_fan<T: Coord>() -> [DualVector<T>; 3] {
    let (o, z) = (T::one(), T::zero());
    [
        DualVector::new(o, o),
        DualVector::new(-o, z),
        DualVector::new(z, -o),
    ]
}

/// Euler's totient by trial division.
pub fn totient(l: u64) -> Result<u64> {
    if l == 0 {
        return Err(Error::TotientOfZero);
    }
    let mut n = l;
    let mut phi = l;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            phi -= phi / d;
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

/// Primitive dual vectors of norm `l` lying in the half-open cone `C~_1`,
/// ordered by increasing `b2`-coordinate.
pub fn primitive_vectors_in_first_cone<T: Coord>(l: T) -> Vec<DualVector<T>> {
    let mut out = Vec::new();
    let mut c2 = T::one();
    while c2 <= l {
        if c2.gcd(&l).is_one() {
            // c2*b2 + c3*b3 with c3 = l - c2
            out.push(DualVector::new(-c2, -(l - c2)));
        }
        c2 = c2 + T::one();
    }
    out
}

/// Every primitive dual vector of norm `l`: the `C~_1` list followed by its
/// images under one and two rotations. Empty for `l < 1`.
pub fn primitive_vectors_of_norm<T: Coord>(l: T) -> Vec<DualVector<T>> {
    let first = primitive_vectors_in_first_cone(l);
    let second: Vec<_> = first.iter().map(|v| v.rotate()).collect();
    let third: Vec<_> = second.iter().map(|v| v.rotate()).collect();
    let mut out = first;
    out.extend(second);
    out.extend(third);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type V = DualVector<i64>;

    fn v(p: i64, q: i64) -> V {
        V::new(p, q)
    }

    #[test]
    fn normal_fan_is_balanced_with_unit_norms() {
        let [b1, b2, b3] = canonical_normal_fan::<i64>();
        assert_eq!((b1, b2, b3), (v(1, 1), v(-1, 0), v(0, -1)));
        assert!((b1 + b2 + b3).is_zero());
        for b in [b1, b2, b3] {
            assert_eq!(b.norm(), 1);
        }
    }

    #[test]
    fn each_normal_is_maximized_on_its_edge() {
        let tri = [
            LatticePoint::new(0i64, 0),
            LatticePoint::new(1, 0),
            LatticePoint::new(0, 1),
        ];
        // b_i is maximal exactly on the edge opposite to a_i
        for (i, b) in canonical_normal_fan::<i64>().iter().enumerate() {
            let best = tri.iter().map(|&a| b.eval(a)).max().unwrap();
            let argmax: Vec<usize> = (0..3).filter(|&j| b.eval(tri[j]) == best).collect();
            let expect: Vec<usize> = (0..3).filter(|&j| j != i).collect();
            assert_eq!(argmax, expect);
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(v(1, 1).norm(), 1);
        assert_eq!(v(0, 0).norm(), 0);
        assert_eq!(v(-1, -1).norm(), 2);
    }

    #[test]
    fn triple_view_is_max_of_cyclic_differences() {
        for p in -6..=6 {
            for q in -6..=6 {
                let w = v(p, q).to_triple();
                assert_eq!(w.iter().sum::<i64>(), 0);
                let d = (w[0] - w[1]).max(w[1] - w[2]).max(w[2] - w[0]);
                assert_eq!(d, v(p, q).norm());
                assert_eq!(V::from_triple(w).unwrap(), v(p, q));
            }
        }
        assert!(V::from_triple([1, 0, 0]).is_err());
    }

    #[test]
    fn duality_between_lattice_and_dual_triples() {
        let w = v(3, -2).to_triple();
        let pt = LatticePoint::new(5i64, 7);
        let u = pt.to_triple();
        assert_eq!(LatticePoint::from_triple(u), pt);
        let paired: i64 = w.iter().zip(u).map(|(a, b)| a * b).sum();
        assert_eq!(paired, v(3, -2).eval(pt));
    }

    #[test]
    fn primitivity_and_length() {
        assert_eq!(v(2, 4).lattice_length(), 2);
        assert_eq!(v(2, 4).primitive_part().unwrap(), v(1, 2));
        assert_eq!(v(0, 0).lattice_length(), 0);
        assert!(v(-1, 1).is_primitive());
        assert_eq!(v(-1, 1).lattice_length(), 1);
        assert_eq!(v(0, -3).primitive_part().unwrap(), v(0, -1));
        assert_eq!(v(0, 0).primitive_part(), Err(Error::ZeroVector));
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), Ok(1));
        assert_eq!(totient(4), Ok(2));
        assert_eq!(totient(5), Ok(4));
        assert_eq!(totient(36), Ok(12));
        assert_eq!(totient(97), Ok(96));
        assert_eq!(totient(0), Err(Error::TotientOfZero));
    }

    #[test]
    fn level_sets() {
        let one = primitive_vectors_of_norm(1i64);
        let mut sorted = one.clone();
        sorted.sort();
        let mut fan = canonical_normal_fan::<i64>().to_vec();
        fan.sort();
        assert_eq!(sorted, fan);
        assert_eq!(primitive_vectors_of_norm(3i64).len(), 6);
        assert!(primitive_vectors_of_norm(0i64).is_empty());
    }

    #[test]
    fn rotation() {
        let [b1, b2, b3] = canonical_normal_fan::<i64>();
        assert_eq!(b1.rotate(), b2);
        assert_eq!(b2.rotate(), b3);
        assert_eq!(b3.rotate(), b1);
        let w = v(3, -2);
        assert_eq!(w.rotate().rotate().rotate(), w);
        assert!((w + w.rotate() + w.rotate().rotate()).is_zero());
        assert_eq!(V::zero().rotate(), V::zero());
    }

    #[test]
    fn cones() {
        let [_, b2, b3] = canonical_normal_fan::<i64>();
        let loc = (b2 + b3).cone_index().unwrap();
        assert_eq!(loc, ConeLocation { cone: Cone::C1, interior: true });
        // b2 is on the included ray of C~1, not in C~3
        let loc = b2.cone_index().unwrap();
        assert_eq!(loc, ConeLocation { cone: Cone::C1, interior: false });
        // (2,1) = 1*b3 + 2*b1
        let loc = v(2, 1).cone_index().unwrap();
        assert_eq!(loc.cone, Cone::C2);
        assert_eq!(v(2, 1).cone_coordinates(Cone::C2), (1, 2));
        assert_eq!(V::zero().cone_index(), Err(Error::ZeroVector));
    }

    #[test]
    fn generic_over_narrow_integers() {
        let w = DualVector::<i16>::new(-1, -1);
        assert_eq!(w.norm(), 2);
        assert_eq!(primitive_vectors_of_norm(4i32).len(), 6);
    }
}
