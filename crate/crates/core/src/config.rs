//! Vector configurations in the dual lattice and the correspondence with
//! polygons: each edge maps to its outer normal scaled by its lattice length.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{DualVector, LatticePoint};
use crate::polytope::Polytope;
use crate::scalar::Coord;

/// Nonzero dual vectors with pairwise distinct directions, kept in
/// counterclockwise angular order starting from direction `(1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VectorConfiguration<T> {
    vectors: Vec<DualVector<T>>,
}

fn half<T: Coord>(v: DualVector<T>) -> u8 {
    let zero = T::zero();
    if v.q > zero || (v.q == zero && v.p > zero) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order from direction `(1, 0)`; parallel vectors
/// with the same direction compare equal.
pub fn angular_cmp<T: Coord>(a: &DualVector<T>, b: &DualVector<T>) -> Ordering {
    half(*a).cmp(&half(*b)).then_with(|| {
        let c = a.cross(*b);
        T::zero().cmp(&c)
    })
}

impl<T: Coord> VectorConfiguration<T> {
    pub fn new(mut vectors: Vec<DualVector<T>>) -> Result<Self> {
        if vectors.iter().any(|v| v.is_zero()) {
            return Err(Error::ZeroInConfiguration);
        }
        vectors.sort_by(angular_cmp);
        for w in vectors.windows(2) {
            if w[0].same_direction(w[1]) {
                return Err(Error::DuplicateDirection(w[0].to_string()));
            }
        }
        Ok(Self { vectors })
    }

    pub fn empty() -> Self {
        Self { vectors: Vec::new() }
    }

    pub fn vectors(&self) -> &[DualVector<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn sum(&self) -> DualVector<T> {
        self.vectors
            .iter()
            .fold(DualVector::zero(), |acc, &v| acc + v)
    }

    pub fn is_balanced(&self) -> bool {
        self.sum().is_zero()
    }

    pub fn is_primitive_only(&self) -> bool {
        self.vectors.iter().all(|v| v.is_primitive())
    }

    /// Sum of asymmetric norms; three times the valuation.
    pub fn norm_sum(&self) -> T {
        self.vectors
            .iter()
            .fold(T::zero(), |acc, v| acc + v.norm())
    }

    /// `(1/3) * sum of norms`, exactly.
    pub fn valuation_m(&self) -> Ratio<T> {
        Ratio::new(self.norm_sum(), T::lit(3))
    }

    /// Union with same-direction pairs replaced by their sum.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let mut used = vec![false; other.len()];
        for &v in &self.vectors {
            match other.vectors.iter().position(|&w| v.same_direction(w)) {
                Some(j) => {
                    used[j] = true;
                    out.push(v + other.vectors[j]);
                }
                None => out.push(v),
            }
        }
        for (j, &w) in other.vectors.iter().enumerate() {
            if !used[j] {
                out.push(w);
            }
        }
        Self::new(out).expect("merge keeps directions distinct")
    }

    /// Edge vectors of the corresponding polygon, counterclockwise: the
    /// normal `(p, q)` becomes the edge `(-q, p)`.
    pub fn edge_vectors(&self) -> Vec<LatticePoint<T>> {
        self.vectors
            .iter()
            .map(|v| LatticePoint::new(-v.q, v.p))
            .collect()
    }
}

/// Outer normals of the edges scaled by lattice length.
pub fn d_map<T: Coord>(polytope: &Polytope<T>) -> VectorConfiguration<T> {
    let vectors = polytope
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let e = b - a;
            // clockwise quarter turn of a counterclockwise edge
            DualVector::new(e.y, -e.x)
        })
        .collect();
    VectorConfiguration::new(vectors).expect("edges of a convex polygon have distinct normals")
}

/// The unique canonical polygon whose configuration is `config`.
pub fn reconstruct<T: Coord>(config: &VectorConfiguration<T>) -> Result<Polytope<T>> {
    if !config.is_balanced() {
        return Err(Error::Unbalanced(config.sum().to_string()));
    }
    let mut walk = Vec::with_capacity(config.len() + 1);
    let mut at = LatticePoint::origin();
    walk.push(at);
    for e in config.edge_vectors() {
        at = at + e;
        walk.push(at);
    }
    Polytope::convex_hull(&walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::canonical_normal_fan;

    type V = DualVector<i64>;
    type P = LatticePoint<i64>;

    fn cfg(v: &[(i64, i64)]) -> VectorConfiguration<i64> {
        VectorConfiguration::new(v.iter().map(|&(p, q)| V::new(p, q)).collect()).unwrap()
    }

    fn hexagon4() -> Polytope<i64> {
        let v: Vec<P> = [(0, 3), (2, 2), (3, 1), (2, 0), (1, 0), (0, 2)]
            .iter()
            .map(|&(x, y)| P::new(x, y))
            .collect();
        Polytope::convex_hull(&v).unwrap()
    }

    #[test]
    fn angular_order() {
        let c = cfg(&[(0, -1), (-1, 0), (1, 1), (1, 0), (1, -1)]);
        assert_eq!(
            c.vectors(),
            &[V::new(1, 0), V::new(1, 1), V::new(-1, 0), V::new(0, -1), V::new(1, -1)]
        );
    }

    #[test]
    fn rejects_invalid_configurations() {
        assert_eq!(
            VectorConfiguration::new(vec![V::new(1, 1), V::new(2, 2)]),
            Err(Error::DuplicateDirection("(1, 1)".into()))
        );
        assert_eq!(
            VectorConfiguration::new(vec![V::zero()]),
            Err(Error::ZeroInConfiguration)
        );
        // opposite directions are fine
        assert!(VectorConfiguration::new(vec![V::new(1, 1), V::new(-1, -1)]).is_ok());
    }

    #[test]
    fn d_map_examples() {
        let tri = d_map(&Polytope::<i64>::unit_simplex());
        assert_eq!(tri, VectorConfiguration::new(canonical_normal_fan::<i64>().to_vec()).unwrap());
        assert!(d_map(&Polytope::<i64>::point()).is_empty());
        let seg = Polytope::convex_hull(&[P::new(0, 0), P::new(2, 0)]).unwrap();
        assert_eq!(d_map(&seg), cfg(&[(0, 2), (0, -2)]));
        assert_eq!(d_map(&hexagon4()).len(), 6);
        assert!(d_map(&hexagon4()).is_balanced());
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(
            reconstruct(&cfg(&[(1, 1), (-1, 0), (0, -1)])).unwrap(),
            Polytope::unit_simplex()
        );
        assert_eq!(reconstruct(&VectorConfiguration::<i64>::empty()).unwrap(), Polytope::point());
        assert_eq!(reconstruct(&d_map(&hexagon4())).unwrap(), hexagon4());
        assert!(matches!(
            reconstruct(&cfg(&[(1, 1), (-1, 0)])),
            Err(Error::Unbalanced(_))
        ));
    }

    #[test]
    fn merge_examples() {
        let d = cfg(&[(1, 1), (-1, 0), (0, -1)]);
        assert_eq!(d.merge(&d), cfg(&[(2, 2), (-2, 0), (0, -2)]));
        assert_eq!(d.merge(&VectorConfiguration::empty()), d);
        assert_eq!(cfg(&[(1, 1)]).merge(&cfg(&[(2, 2)])), cfg(&[(3, 3)]));
        let tri = Polytope::<i64>::unit_simplex();
        assert_eq!(
            d_map(&hexagon4().minkowski_sum(&tri)),
            d_map(&hexagon4()).merge(&d_map(&tri))
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(d_map(&Polytope::<i64>::unit_simplex()).valuation_m(), Ratio::from_integer(1));
        assert_eq!(VectorConfiguration::<i64>::empty().valuation_m(), Ratio::from_integer(0));
        assert_eq!(d_map(&hexagon4()).valuation_m(), Ratio::from_integer(4));
        // unbalanced input stays inspectable
        assert_eq!(cfg(&[(1, 1)]).valuation_m(), Ratio::new(1, 3));
    }
}
