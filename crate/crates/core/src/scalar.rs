//! Integer scalar abstraction shared by the lattice and polygon layers.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

/// Exact signed integer usable as a lattice coordinate.
///
/// Implemented for every primitive signed integer; the crate root fixes
/// `i64` for the concrete aliases.
pub trait Coord:
    PrimInt + Signed + Integer + Hash + Debug + Display + Send + Sync + 'static
{
    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// Converts a small literal; panics only if the literal does not fit.
    fn lit(v: i64) -> Self {
        Self::from(v).expect("literal fits in coordinate type")
    }
}

impl<T> Coord for T where
    T: PrimInt + Signed + Integer + Hash + Debug + Display + Send + Sync + 'static
{
}
