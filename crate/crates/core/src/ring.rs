use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring arithmetic shared by `i64`, `i128` and `BigInt`.
///
/// Fixed-width instances are only used where values are provably bounded;
/// overflow panics in checked builds.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + From<i32>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + From<i32>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub(crate) fn sq<T: Ring>(x: &T) -> T {
    x.clone() * x.clone()
}
