//! Exact integer arithmetic shared by every counting routine.
//!
//! All counts in this crate are produced in a caller-chosen exact integer
//! type. [`BigUint`](num_bigint::BigUint) is the default (see
//! [`crate::Count`]); fixed-width machine integers work as long as the values
//! fit, and every operation here is checked so an overflow surfaces as an
//! [`Error::Overflow`] instead of a wrong answer.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};

/// An exact integer type usable as a count.
pub trait ExactInt:
    Integer
    + Clone
    + Debug
    + Display
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> ExactInt for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub(crate) fn from_u64<T: ExactInt>(v: u64, formula: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow { formula })
}

pub(crate) fn add<T: ExactInt>(a: &T, b: &T, formula: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow { formula })
}

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T, formula: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow { formula })
}

/// `a - b`, failing with [`Error::Negative`] when the difference would drop
/// below zero. Closed forms in this crate never legitimately go negative.
pub(crate) fn sub<T: ExactInt>(a: &T, b: &T, formula: &'static str) -> Result<T> {
    if b > a {
        return Err(Error::Negative { formula });
    }
    a.checked_sub(b).ok_or(Error::Overflow { formula })
}

/// `a / b` with a hard error on a nonzero remainder.
pub(crate) fn div_exact<T: ExactInt>(a: &T, b: &T, formula: &'static str) -> Result<T> {
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            formula,
            numerator: a.to_string(),
            denominator: b.to_string(),
        });
    }
    Ok(q)
}

/// Binomial coefficient with the zero convention extended in both
/// directions: `C(a, b) = 0` whenever `b < 0`, `a < 0` or `b > a`.
pub fn binom<T: ExactInt>(a: i64, b: i64) -> Result<T> {
    if b < 0 || a < 0 || b > a {
        return Ok(T::zero());
    }
    let b = b.min(a - b);
    let mut acc = T::one();
    for k in 1..=b {
        // acc * (a - b + k) is divisible by k: acc is C(a - b + k - 1, k - 1)
        let num = mul(&acc, &from_u64((a - b + k) as u64, "binom")?, "binom")?;
        acc = div_exact(&num, &from_u64(k as u64, "binom")?, "binom")?;
    }
    Ok(acc)
}
