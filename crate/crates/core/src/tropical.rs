//! Plane tropical curves with constant coefficients, their degree, and the
//! bound on the number of rays through `A(d)`.
//!
//! A ray direction `u` lives in `Z^k / Z(1,...,1)` and is stored by its
//! representative with minimum coordinate zero. For `k = 3` the lattice
//! point `(u1 - u2, u2 - u3)` is an edge of the Newton polygon; its outer
//! normal is that edge turned clockwise, scaled by the multiplicity.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::config::reconstruct;
use crate::error::{Error, Result, TropicalError};
use crate::saturated::{a_bounds, ABound};
use crate::search::{max_vertices_branch_and_bound, SearchLimits};
use crate::{Config, Dual, Polygon};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ray {
    pub u: Vec<i64>,
    pub mult: i64,
}

impl Ray {
    pub fn new(u: Vec<i64>, mult: i64) -> Self {
        Self { u, mult }
    }
}

/// A balanced weighted fan of rays in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalCurve {
    rays: Vec<Ray>,
    degree: u64,
}

fn gcd_all(u: &[i64]) -> i64 {
    u.iter().fold(0, |g, &x| g.gcd(&x))
}

impl TropicalCurve {
    /// Validates canonical form and balancing.
    pub fn new(rays: Vec<Ray>) -> Result<Self, TropicalError> {
        let first = rays.first().ok_or(TropicalError::Empty)?;
        let dim = first.u.len();
        for (index, r) in rays.iter().enumerate() {
            if r.u.len() != dim {
                return Err(TropicalError::DimensionMismatch {
                    index,
                    found: r.u.len(),
                    expected: dim,
                });
            }
            if dim < 3 {
                return Err(TropicalError::AmbientTooSmall { index });
            }
            if r.u.iter().all(|&x| x == 0) {
                return Err(TropicalError::ZeroRay { index });
            }
            let min = *r.u.iter().min().expect("non-empty");
            if min != 0 {
                return Err(TropicalError::NotCanonical { index, min });
            }
            let gcd = gcd_all(&r.u);
            if gcd != 1 {
                return Err(TropicalError::NotPrimitive { index, gcd });
            }
            if r.mult <= 0 {
                return Err(TropicalError::BadMultiplicity { index, mult: r.mult });
            }
        }
        for (second, r) in rays.iter().enumerate() {
            if let Some(first) = rays[..second].iter().position(|s| s.u == r.u) {
                return Err(TropicalError::DuplicateDirection { first, second });
            }
        }
        let mut sum = vec![0i64; dim];
        for r in &rays {
            for (s, &x) in sum.iter_mut().zip(&r.u) {
                *s += r.mult * x;
            }
        }
        if sum.iter().any(|&s| s != sum[0]) {
            return Err(TropicalError::Unbalanced { sum });
        }
        Ok(Self {
            degree: sum[0] as u64,
            rays,
        })
    }

    /// Brings arbitrary representatives into canonical form first: shifts
    /// each `u` to minimum zero and moves any common factor into the
    /// multiplicity.
    pub fn canonicalized(rays: Vec<Ray>) -> Result<Self, TropicalError> {
        let rays = rays
            .into_iter()
            .map(|r| {
                let min = r.u.iter().copied().min().unwrap_or(0);
                let shifted: Vec<i64> = r.u.iter().map(|&x| x - min).collect();
                let g = gcd_all(&shifted);
                if g > 1 {
                    Ray::new(shifted.iter().map(|&x| x / g).collect(), r.mult * g)
                } else {
                    Ray::new(shifted, r.mult)
                }
            })
            .collect();
        Self::new(rays)
    }

    /// The plane curve dual to a balanced configuration.
    pub fn from_configuration(config: &Config) -> Result<Self, TropicalError> {
        let rays = config
            .vectors()
            .iter()
            .map(|v| {
                let mult = v.lattice_length();
                // edge (-q, p) = (u1 - u2, u2 - u3) with u3 = 0
                let (ex, ey) = (-v.q / mult, v.p / mult);
                Ray::new(vec![ex + ey, ey, 0], mult)
            })
            .collect();
        Self::canonicalized(rays)
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Number of coordinates of each representative.
    pub fn ambient_dim(&self) -> usize {
        self.rays[0].u.len()
    }

    pub fn is_plane(&self) -> bool {
        self.ambient_dim() == 3
    }

    /// Outer normals of the Newton polygon; plane curves only.
    pub fn dual_configuration(&self) -> Result<Config> {
        if !self.is_plane() {
            return Err(TropicalError::DimensionMismatch {
                index: 0,
                found: self.ambient_dim(),
                expected: 3,
            }
            .into());
        }
        let normals = self
            .rays
            .iter()
            .map(|r| {
                let (ex, ey) = (r.u[0] - r.u[1], r.u[1] - r.u[2]);
                Dual::new(ey, -ex) * r.mult
            })
            .collect();
        Config::new(normals)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: u64,
    pub ray_count: usize,
    pub ambient_dim: usize,
    /// Bounds on `A(degree)`; absent for non-plane curves.
    pub bound: Option<ABound>,
    /// `A(degree)` when known exactly.
    pub a_of_degree: Option<u64>,
    /// `None` when the count falls strictly inside an inexact bound, or the
    /// curve is not a plane curve.
    pub within_bound: Option<bool>,
    pub newton_diameter: Option<u64>,
}

/// Degree and ray count, with the `A(d)` comparison for plane curves.
pub fn validate(curve: &TropicalCurve) -> Result<DegreeReport> {
    let mut report = DegreeReport {
        degree: curve.degree(),
        ray_count: curve.ray_count(),
        ambient_dim: curve.ambient_dim(),
        bound: None,
        a_of_degree: None,
        within_bound: None,
        newton_diameter: None,
    };
    if curve.is_plane() {
        let bound = a_bounds(curve.degree())?;
        let count = curve.ray_count() as u64;
        if bound.exact {
            report.a_of_degree = Some(bound.lower);
        }
        report.within_bound = if count <= bound.lower {
            Some(true)
        } else if count > bound.upper {
            Some(false)
        } else {
            None
        };
        report.bound = Some(bound);
    }
    Ok(report)
}

/// Newton polygon of a plane curve, in `degree * simplex`.
pub fn newton_polytope(curve: &TropicalCurve) -> Result<Polygon> {
    let config = curve.dual_configuration()?;
    let p = reconstruct(&config)?;
    let d = p.simplicial_diameter() as u64;
    if d != curve.degree() || p.edges().len() != curve.ray_count() {
        return Err(Error::Precondition(format!(
            "Newton polygon has diameter {d} and {} edges for degree {} with {} rays",
            p.edges().len(),
            curve.degree(),
            curve.ray_count()
        )));
    }
    Ok(p)
}

/// [`validate`] plus the Newton polygon diameter.
pub fn ray_bound_check(curve: &TropicalCurve) -> Result<DegreeReport> {
    let mut report = validate(curve)?;
    if curve.is_plane() {
        report.newton_diameter = Some(newton_polytope(curve)?.simplicial_diameter() as u64);
    }
    Ok(report)
}

/// [`ray_bound_check`], settling an undecided comparison by computing
/// `A(degree)` with the exhaustive search.
pub fn ray_bound_check_exact(curve: &TropicalCurve, limits: SearchLimits) -> Result<DegreeReport> {
    let mut report = ray_bound_check(curve)?;
    if curve.is_plane() && report.a_of_degree.is_none() {
        let r = max_vertices_branch_and_bound(curve.degree(), limits)?;
        if r.is_exact() {
            report.a_of_degree = Some(r.a_of_n);
            report.within_bound = Some(report.ray_count as u64 <= r.a_of_n);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturated::{polytope_of, s_leq};

    fn curve(rays: &[([i64; 3], i64)]) -> Result<TropicalCurve, TropicalError> {
        TropicalCurve::new(rays.iter().map(|&(u, m)| Ray::new(u.to_vec(), m)).collect())
    }

    fn tropical_line(m: i64) -> TropicalCurve {
        curve(&[([1, 0, 0], m), ([0, 1, 0], m), ([0, 0, 1], m)]).unwrap()
    }

    fn tropical_cubic() -> TropicalCurve {
        curve(&[
            ([1, 0, 0], 1),
            ([0, 1, 0], 1),
            ([0, 0, 1], 1),
            ([1, 1, 0], 1),
            ([1, 0, 1], 1),
            ([0, 1, 1], 1),
        ])
        .unwrap()
    }

    #[test]
    fn degrees() {
        let r = validate(&tropical_line(1)).unwrap();
        assert_eq!((r.degree, r.ray_count, r.a_of_degree, r.within_bound), (1, 3, Some(3), Some(true)));
        let r = validate(&tropical_cubic()).unwrap();
        assert_eq!((r.degree, r.ray_count, r.a_of_degree, r.within_bound), (3, 6, Some(6), Some(true)));
        let r = validate(&tropical_line(2)).unwrap();
        assert_eq!((r.degree, r.ray_count), (2, 3));
        assert_eq!(r.within_bound, Some(true));
    }

    #[test]
    fn newton_polygons() {
        assert_eq!(newton_polytope(&tropical_line(1)).unwrap(), Polygon::unit_simplex());
        assert_eq!(newton_polytope(&tropical_line(2)).unwrap(), Polygon::dilated_simplex(2));
        let hex = newton_polytope(&tropical_cubic()).unwrap();
        assert_eq!(hex, polytope_of(&s_leq(2)).unwrap());
        assert_eq!(hex.simplicial_diameter(), 3);
        assert_eq!(hex.f0(), 6);
    }

    #[test]
    fn rejections() {
        use TropicalError::*;
        assert_eq!(TropicalCurve::new(vec![]), Err(Empty));
        assert!(matches!(curve(&[([1, 1, 1], 1)]), Err(NotCanonical { index: 0, min: 1 })));
        assert!(matches!(curve(&[([2, 0, 0], 1)]), Err(NotPrimitive { index: 0, gcd: 2 })));
        assert!(matches!(curve(&[([0, 0, 0], 1)]), Err(ZeroRay { index: 0 })));
        assert!(matches!(curve(&[([1, 0, 0], 0)]), Err(BadMultiplicity { .. })));
        assert!(matches!(
            curve(&[([1, 0, 0], 1), ([1, 0, 0], 2)]),
            Err(DuplicateDirection { first: 0, second: 1 })
        ));
        assert!(matches!(curve(&[([1, 0, 0], 1), ([0, 1, 0], 1)]), Err(Unbalanced { .. })));
        assert!(matches!(
            TropicalCurve::new(vec![Ray::new(vec![1, 0], 1)]),
            Err(AmbientTooSmall { index: 0 })
        ));
        assert!(matches!(
            TropicalCurve::new(vec![Ray::new(vec![1, 0, 0], 1), Ray::new(vec![0, 1, 0, 0], 1)]),
            Err(DimensionMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn seven_rays_cannot_have_degree_two() {
        // the weighted coordinate sums total 3d = 6, but seven rays need at least 7
        let rays = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
            [2, 1, 0],
        ];
        let c = curve(&rays.map(|u| (u, 1)));
        assert!(matches!(c, Err(TropicalError::Unbalanced { .. })));
        assert!(matches!(
            TropicalCurve::new(rays.iter().map(|u| Ray::new(u.to_vec(), 1)).collect()).map_err(Error::from),
            Err(Error::Tropical(_))
        ));
    }

    #[test]
    fn canonicalization() {
        let c = TropicalCurve::canonicalized(vec![
            Ray::new(vec![3, 1, 1], 1),
            Ray::new(vec![5, 7, 5], 1),
            Ray::new(vec![-2, -2, 0], 1),
        ])
        .unwrap();
        assert_eq!(c, tropical_line(2));
    }

    #[test]
    fn configuration_roundtrip() {
        let hex = polytope_of(&s_leq(2)).unwrap();
        let cfg = crate::d_map(&hex);
        let c = TropicalCurve::from_configuration(&cfg).unwrap();
        assert_eq!(c.dual_configuration().unwrap(), cfg);
        assert_eq!(c.degree(), 3);
    }

    #[test]
    fn higher_ambient_dimension() {
        // the line in R^4 / R(1,1,1,1)
        let rays = (0..4)
            .map(|i| {
                let mut u = vec![0; 4];
                u[i] = 1;
                Ray::new(u, 1)
            })
            .collect();
        let c = TropicalCurve::new(rays).unwrap();
        let r = ray_bound_check(&c).unwrap();
        assert_eq!((r.degree, r.ray_count, r.ambient_dim), (1, 4, 4));
        assert_eq!(r.within_bound, None);
        assert!(newton_polytope(&c).is_err());
    }

    #[test]
    fn exact_check_fills_gaps() {
        // degree 7 lies in a gap of the saturated bounds
        let cfg = max_vertices_branch_and_bound(7, SearchLimits::default()).unwrap().witness;
        let c = TropicalCurve::from_configuration(&cfg).unwrap();
        assert_eq!(c.degree(), 7);
        let r = ray_bound_check_exact(&c, SearchLimits::default()).unwrap();
        assert_eq!(r.a_of_degree, Some(10));
        assert_eq!(r.within_bound, Some(true));
        assert_eq!(r.newton_diameter, Some(7));
    }
}
