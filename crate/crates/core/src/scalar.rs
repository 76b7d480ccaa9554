//! Integer scalar abstraction for weights.
//!
//! Every computation in this crate is exact. Weights are integers, localized
//! characteristic numbers are `Ratio<T>` over the same integer type. The
//! arbitrary-precision instantiation (`BigInt`) never overflows; the
//! fixed-width ones report [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Integer type that can carry weights.
pub trait IntScalar:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Send
    + Sync
    + 'static
{
    fn checked_negate(&self) -> Option<Self>;
}

macro_rules! impl_int_scalar {
    ($($t:ty),*) => {
        $(
            impl IntScalar for $t {
                #[inline]
                fn checked_negate(&self) -> Option<Self> {
                    self.checked_neg()
                }
            }
        )*
    };
}

impl_int_scalar!(i32, i64, i128);

impl IntScalar for BigInt {
    #[inline]
    fn checked_negate(&self) -> Option<Self> {
        Some(-self)
    }
}

#[inline]
pub(crate) fn add<T: IntScalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul<T: IntScalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn neg<T: IntScalar>(a: &T) -> Result<T> {
    a.checked_negate().ok_or(Error::Overflow)
}

pub(crate) fn from_i64<T: IntScalar>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn ratio_add<T: IntScalar>(a: &Ratio<T>, b: &Ratio<T>) -> Result<Ratio<T>> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn ratio_div<T: IntScalar>(a: &Ratio<T>, b: &Ratio<T>) -> Result<Ratio<T>> {
    a.checked_div(b).ok_or(Error::Overflow)
}

/// Absolute value with overflow detection (`i64::MIN.abs()` does not exist).
pub(crate) fn abs<T: IntScalar>(a: &T) -> Result<T> {
    if a.is_negative() {
        neg(a)
    } else {
        Ok(a.clone())
    }
}
