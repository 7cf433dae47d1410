//! Vertex-maximal lattice polygons inside dilated unimodular triangles.
//!
//! The lattice layer ([`lattice`], [`polytope`], [`config`]) is generic over
//! the integer coordinate type; the aliases below fix `i64`, which the
//! higher-level modules use throughout.

pub mod config;
pub mod error;
pub mod io;
pub mod lattice;
pub mod normalize;
pub mod polytope;
pub mod saturated;
pub mod scalar;
pub mod search;
pub mod tropical;

pub use config::{d_map, reconstruct, VectorConfiguration};
pub use error::{Error, Result, TropicalError};
pub use lattice::{canonical_normal_fan, primitive_vectors_of_norm, totient, Cone, ConeLocation, DualVector, LatticePoint};
pub use polytope::Polytope;
pub use saturated::{a_bounds, build_qk, polytope_of, s_leq, ABound, SaturatedSet};
pub use scalar::Coord;
pub use normalize::{canonicalize_maximal, strip_boundary_points, touch_all_edges, unit_boundary_edges, CanonicalReport};
pub use search::{
    enumerate_maximal, max_vertices_branch_and_bound, max_vertices_geometric, minimum_norm_sum, PruneFlags,
    SearchLimits, SearchResult, SearchStatus,
};
pub use tropical::{newton_polytope, ray_bound_check, validate, DegreeReport, Ray, TropicalCurve};

pub type Point = LatticePoint<i64>;
pub type Dual = DualVector<i64>;
pub type Polygon = Polytope<i64>;
pub type Config = VectorConfiguration<i64>;
