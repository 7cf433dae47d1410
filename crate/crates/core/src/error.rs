use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero vector")]
    ZeroVector,
    #[error("totient is undefined for 0")]
    TotientOfZero,
    #[error("convex hull of an empty point set")]
    EmptyPointSet,
    #[error("vector configuration contains the zero vector")]
    ZeroInConfiguration,
    #[error("two vectors share the direction of {0}")]
    DuplicateDirection(String),
    #[error("vector configuration is not balanced (sum is {0})")]
    Unbalanced(String),
    #[error("invalid saturated set: {0}")]
    InvalidSaturatedSet(String),
    #[error("simplicial diameter {diameter} exceeds {n}")]
    DiameterExceeds { diameter: i64, n: i64 },
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no fixpoint with unit contact edges exists or was reached: {0}")]
    UnitContactsUnreachable(String),
    #[error("invalid tropical curve: {0}")]
    Tropical(#[from] TropicalError),
    #[error("search inconclusive after {nodes} nodes")]
    Inconclusive { nodes: u64 },
    #[error("malformed input: {0}")]
    Format(String),
}

/// Distinct rejection reasons for tropical curve input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropicalError {
    #[error("curve has no rays")]
    Empty,
    #[error("ray {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("ray {index} lives in fewer than 3 coordinates")]
    AmbientTooSmall { index: usize },
    #[error("ray {index} has minimum coordinate {min}, expected 0")]
    NotCanonical { index: usize, min: i64 },
    #[error("ray {index} is the zero vector")]
    ZeroRay { index: usize },
    #[error("ray {index} is not primitive (gcd {gcd})")]
    NotPrimitive { index: usize, gcd: i64 },
    #[error("ray {index} has non-positive multiplicity {mult}")]
    BadMultiplicity { index: usize, mult: i64 },
    #[error("rays {first} and {second} share a direction")]
    DuplicateDirection { first: usize, second: usize },
    #[error("weighted ray sum {sum:?} is not a multiple of (1,...,1)")]
    Unbalanced { sum: Vec<i64> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
