use crate::error::{Error, Result};

use super::bound::check_u;

/// Upper limit on the number of multiplications `element_order` performs.
pub const ORDER_ITERATION_CAP: u128 = 1 << 26;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_i(a: i128, b: i128) -> i128 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i128
}

/// `(a + b) mod m` for `a, b < m < 2^127`.
#[inline]
pub fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// `(a - b) mod m` for `a, b < m`.
#[inline]
pub fn sub_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// `(a * b) mod m` for `a, b < m < 2^127`, without intermediate overflow.
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let Some(p) = a.checked_mul(b) {
        return p % m;
    }
    // Double-and-add; every intermediate stays below 2m < 2^128.
    let (mut a, mut b) = (a % m, b);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

pub fn pow_mod(base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` modulo `m`, if it exists.
///
/// Extended Euclid carried out on Bezout coefficients reduced modulo `m`,
/// so nothing grows past the modulus.
pub fn mod_inverse(a: u128, m: u128) -> Option<u128> {
    if m < 2 {
        return None;
    }
    let (mut r0, mut r1) = (m, a % m);
    // Coefficients of `a` in r0 and r1, kept as residues mod m.
    let (mut s0, mut s1) = (0u128, 1u128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        let qs = mul_mod(q % m, s1, m);
        (s0, s1) = (s1, sub_mod(s0, qs, m));
    }
    if r0 == 1 {
        Some(s0)
    } else {
        None
    }
}

/// Multiplicative order of `x` modulo `m`, giving up after `limit` steps.
///
/// Returns `Ok(None)` when the order exceeds `limit`.
pub fn order_at_most(x: u128, m: u128, limit: u128) -> Result<Option<u128>> {
    check_unit(x, m)?;
    let mut acc = x % m;
    let mut k = 1u128;
    while acc != 1 % m {
        if k >= limit {
            return Ok(None);
        }
        acc = mul_mod(acc, x, m);
        k += 1;
    }
    Ok(Some(k))
}

/// Smallest `k >= 1` with `x^k = 1 (mod m)`.
pub fn element_order(x: u128, m: u128) -> Result<u128> {
    order_at_most(x, m, ORDER_ITERATION_CAP)?
        .ok_or(Error::EnumerationCap { needed: ORDER_ITERATION_CAP + 1, cap: ORDER_ITERATION_CAP })
}

fn check_unit(x: u128, m: u128) -> Result<()> {
    check_u(m)?;
    if m < 2 {
        return Err(Error::InvalidParams(format!("modulus {m} must be at least 2")));
    }
    if x == 0 || x >= m || gcd(x, m) != 1 {
        return Err(Error::NotCoprime { value: x, modulus: m });
    }
    Ok(())
}
