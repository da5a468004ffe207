//! Explicit perfect constructions.
//!
//! For `t = n - 1` the sequence `1, x, x^2, ..., x^{n-1}` in `Z_m`, with
//! `m = (l+1)^n - l^n` and `x = (l+1) * l^{-1} mod m`, is a `B_{n-1}[l]`
//! sequence of exactly sphere size. For `t = n` the unit vectors of
//! `Z_{l+1}^n` tile trivially.

use crate::error::{Error, Result};
use crate::integers::{bound, gcd, mod_inverse, mul_mod, order_at_most};

use super::bh::BhSequence;
use super::group::AbelianGroup;

/// Outcome of checking the three number-theoretic facts the `t = n - 1`
/// construction relies on, in `Z_m`, `m = (l+1)^n - l^n`:
/// `p1`: `l` is a unit; `p2`: `x = (l+1)/l` has order exactly `n`;
/// `p3`: `1 + x + ... + x^{n-1} = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LProperties {
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
}

impl LProperties {
    pub fn all(&self) -> bool {
        self.p1 && self.p2 && self.p3
    }
}

/// `(l+1)^n - l^n`, the size of `S(n, n-1, l)`.
pub fn perfect_modulus(n: usize, ell: u64) -> Result<u128> {
    let ell = bound::from_u64(ell)?;
    let hi = bound::upow(ell + 1, n as u64)?;
    let lo = bound::upow(ell, n as u64)?;
    Ok(hi - lo)
}

fn check_construction_args(n: usize, ell: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("construction needs n >= 2, got {n}")));
    }
    if ell == 0 {
        return Err(Error::InvalidParams("magnitude bound l must be at least 1".into()));
    }
    Ok(())
}

/// The ratio `x = (l+1) * l^{-1}` in `Z_m`, if `l` is invertible.
fn ratio(m: u128, ell: u64) -> Option<u128> {
    let l = ell as u128 % m;
    let inv = mod_inverse(l, m)?;
    Some(mul_mod((ell as u128 + 1) % m, inv, m))
}

pub fn check_l_properties(n: usize, ell: u64) -> Result<LProperties> {
    check_construction_args(n, ell)?;
    let m = perfect_modulus(n, ell)?;
    let p1 = gcd(ell as u128 % m, m) == 1;
    let Some(x) = ratio(m, ell) else {
        return Ok(LProperties { p1, p2: false, p3: false });
    };
    let p2 = gcd(x, m) == 1 && order_at_most(x, m, n as u128)? == Some(n as u128);
    let mut sum = 0u128;
    let mut power = 1 % m;
    for _ in 0..n {
        sum = (sum + power) % m;
        power = mul_mod(power, x, m);
    }
    Ok(LProperties { p1, p2, p3: sum == 0 })
}

/// `{1, x, ..., x^{n-1}}` in `Z_{(l+1)^n - l^n}`, a perfect `B_{n-1}[l]`
/// sequence.
pub fn construct_perfect_sequence(n: usize, ell: u64) -> Result<BhSequence> {
    check_construction_args(n, ell)?;
    let m = perfect_modulus(n, ell)?;
    let x = ratio(m, ell).ok_or_else(|| Error::Inconsistency(format!("l = {ell} is not a unit modulo {m}")))?;
    let group = AbelianGroup::cyclic(m)?;
    let mut elements = Vec::with_capacity(n);
    let mut power = 1u128;
    for _ in 0..n {
        elements.push(group.element(vec![power])?);
        power = mul_mod(power, x, m);
    }
    BhSequence::new(group, elements, n - 1, ell)
}

/// Unit vectors of `Z_{l+1}^n`; perfect for `t = n`.
pub fn construct_trivial_full_cube(n: usize, ell: u64) -> Result<BhSequence> {
    if n == 0 {
        return Err(Error::InvalidParams("length n must be at least 1".into()));
    }
    if ell == 0 {
        return Err(Error::InvalidParams("magnitude bound l must be at least 1".into()));
    }
    let side = bound::from_u64(ell)? + 1;
    bound::upow(side, n as u64)?;
    let group = AbelianGroup::new(vec![side; n])?;
    let elements = (0..n)
        .map(|i| {
            let mut coords = vec![0u128; n];
            coords[i] = 1;
            group.element(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    BhSequence::new(group, elements, n, ell)
}
