//! The error model: t asymmetric errors of magnitude at most l.

use std::fmt;

use crate::error::{Error, Result};
use crate::integers::bound;

/// Length `n`, error count `t` and magnitude bound `ell`.
///
/// `t = 0` is representable (the singleton sphere) so counting identities
/// work unrestricted; code constructions call [`CodeParams::require_correcting`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    n: usize,
    t: usize,
    ell: u64,
}

impl CodeParams {
    pub fn new(n: usize, t: usize, ell: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("length n must be at least 1".into()));
        }
        if t > n {
            return Err(Error::InvalidParams(format!("t = {t} exceeds n = {n}")));
        }
        if ell == 0 {
            return Err(Error::InvalidParams("magnitude bound l must be at least 1".into()));
        }
        Ok(CodeParams { n, t, ell })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn require_correcting(&self) -> Result<()> {
        if self.t == 0 {
            return Err(Error::InvalidParams("a code must correct at least one error (t >= 1)".into()));
        }
        Ok(())
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, t={}, l={})", self.n, self.t, self.ell)
    }
}

/// A vector of nonnegative level shifts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErrorVector(Vec<u64>);

impl ErrorVector {
    /// Validates the entries against `p`.
    pub fn new(entries: Vec<u64>, p: &CodeParams) -> Result<Self> {
        if entries.len() != p.n {
            return Err(Error::LengthMismatch { expected: p.n, got: entries.len() });
        }
        let v = ErrorVector(entries);
        if v.weight() > p.t || v.0.iter().any(|&e| e > p.ell) {
            return Err(Error::InvalidParams(format!("{v:?} is not in the sphere {p}")));
        }
        Ok(v)
    }

    pub fn zero(n: usize) -> Self {
        ErrorVector(vec![0; n])
    }

    #[cfg(test)]
    pub(crate) fn from_raw(entries: Vec<u64>) -> Self {
        ErrorVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Debug for ErrorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `sum_{i=0}^{t} C(n, i) * l^i`, exact.
pub fn sphere_size(p: &CodeParams) -> Result<u128> {
    let ell = bound::from_u64(p.ell)?;
    let n = p.n as u128;
    let mut binom: u128 = 1;
    let mut power: u128 = 1;
    let mut total: u128 = 1;
    for i in 1..=p.t as u128 {
        // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at each step.
        binom = bound::umul(binom, n - i + 1)? / i;
        power = bound::umul(power, ell)?;
        total = bound::uadd(total, bound::umul(binom, power)?)?;
    }
    Ok(total)
}

/// Every vector of `S(n, t, l)` exactly once, in lexicographic order.
pub fn enumerate_sphere(p: &CodeParams) -> Result<SphereIter> {
    sphere_size(p)?;
    Ok(SphereIter { t: p.t, ell: p.ell, current: Some(vec![0; p.n]), weight: 0 })
}

pub fn is_in_sphere(e: &[i128], p: &CodeParams) -> Result<bool> {
    if e.len() != p.n {
        return Err(Error::LengthMismatch { expected: p.n, got: e.len() });
    }
    let weight = e.iter().filter(|&&x| x != 0).count();
    Ok(weight <= p.t && e.iter().all(|&x| 0 <= x && x <= p.ell as i128))
}

#[derive(Debug, Clone)]
pub struct SphereIter {
    t: usize,
    ell: u64,
    current: Option<Vec<u64>>,
    weight: usize,
}

impl SphereIter {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else { return };
        let mut suffix_weight = 0;
        for i in (0..cur.len()).rev() {
            let nonzero = cur[i] > 0;
            let prefix_weight = self.weight - suffix_weight - nonzero as usize;
            if cur[i] < self.ell && (nonzero || prefix_weight < self.t) {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|e| *e = 0);
                self.weight = prefix_weight + 1;
                return;
            }
            suffix_weight += nonzero as usize;
        }
        self.current = None;
    }
}

impl Iterator for SphereIter {
    type Item = ErrorVector;

    fn next(&mut self) -> Option<ErrorVector> {
        let out = self.current.clone()?;
        self.advance();
        Some(ErrorVector(out))
    }
}
