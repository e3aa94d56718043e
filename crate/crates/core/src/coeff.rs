//! Exact coefficient rings.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact signed integer ring usable as series coefficients.
///
/// Implemented for every type with checked ring operations, so `i64`, `i128`
/// and `BigInt` all qualify. Fixed-width types report [`Error::Overflow`]
/// instead of wrapping.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + Ord
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i64>
    + Send
    + Sync
    + 'static
{
    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn try_sub(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other).ok_or(Error::Overflow)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }

    /// `(-1)^e` in the ring.
    fn sign_pow(e: usize) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Zero
        + One
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i64>
        + Send
        + Sync
        + 'static
{
}
