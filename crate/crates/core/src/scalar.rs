//! Numeric traits the generic layers are written against.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

/// Non-negative multiplicity counts in weight multisets.
pub trait Count:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + CheckedSub
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + CheckedSub
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// A field of coefficients for polynomials and matrices.
///
/// Exactness is the caller's business: `BigRational` gives exact answers,
/// floating types only approximate ones.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the field")
    }
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}
