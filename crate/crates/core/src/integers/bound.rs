//! The artifact-wide magnitude bound and checked arithmetic against it.
//!
//! Every exact integer handled by the library has magnitude strictly below
//! `2^bits`, where `bits` is 127 unless the `LIMAG_MAX_BITS` environment
//! variable asks for something smaller. Values outside the bound are
//! rejected with [`Error::Overflow`], never wrapped.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hard ceiling on the magnitude bound.
pub const MAX_BITS: u32 = 127;

/// Environment variable that may lower (never raise) the bound.
pub const BITS_ENV: &str = "LIMAG_MAX_BITS";

static BITS: OnceLock<u32> = OnceLock::new();

/// The active magnitude bound in bits, read once per process.
pub fn magnitude_bits() -> u32 {
    *BITS.get_or_init(|| {
        std::env::var(BITS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .map(|b| b.clamp(1, MAX_BITS))
            .unwrap_or(MAX_BITS)
    })
}

#[inline]
pub(crate) fn overflow() -> Error {
    Error::Overflow { bits: magnitude_bits() }
}

#[inline]
pub fn check_u(v: u128) -> Result<u128> {
    if v >> magnitude_bits() == 0 {
        Ok(v)
    } else {
        Err(overflow())
    }
}

#[inline]
pub fn check_i(v: i128) -> Result<i128> {
    if v.unsigned_abs() >> magnitude_bits() == 0 {
        Ok(v)
    } else {
        Err(overflow())
    }
}

#[inline]
pub fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(overflow).and_then(check_i)
}

#[inline]
pub fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or_else(overflow).and_then(check_i)
}

#[inline]
pub fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow).and_then(check_i)
}

#[inline]
pub fn uadd(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(overflow).and_then(check_u)
}

#[inline]
pub fn umul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(overflow).and_then(check_u)
}

pub fn upow(base: u128, exp: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = umul(acc, base)?;
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

/// Converts a vector-entry-sized value to the exact integer domain.
#[inline]
pub fn from_u64(v: u64) -> Result<u128> {
    check_u(v as u128)
}
