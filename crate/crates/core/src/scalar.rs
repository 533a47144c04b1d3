//! The integer scalar abstraction shared by every layer of the crate.
//!
//! All algebra is exact integer arithmetic. The code is generic over the
//! integer type so that the arbitrary-precision [`num_bigint::BigInt`] (the
//! default, see [`crate::Int`]) and fixed-width machine integers can share one
//! implementation; fixed-width types are only suitable when entries are known
//! to stay small, since Smith normal form can blow up intermediate entries.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed integer type usable as a matrix entry.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + 'static
    + Signed
    + Integer
    + FromPrimitive
    + ToPrimitive
    + FromStr
{
    /// Converts a machine integer into the scalar type.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type represents i64 values")
    }

    /// Non-negative residue of `self` modulo `m`; `m = 0` means "no reduction".
    fn reduce_mod(&self, m: &Self) -> Self {
        if m.is_zero() {
            self.clone()
        } else {
            self.mod_floor(m)
        }
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Send
        + Sync
        + 'static
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + FromStr
{
}
