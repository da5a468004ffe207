use std::collections::HashMap;

use crate::error::{Collision, Error, Result};
use crate::integers::{add_mod, bound, mul_mod};
use crate::sphere::{enumerate_sphere, sphere_size, CodeParams};

use super::group::{AbelianGroup, GroupElement};

/// Most sphere vectors a single injectivity check will enumerate.
pub const ENUMERATION_CAP: u128 = 1 << 25;

/// A (candidate) `B_t[l](G)` sequence `b_1, ..., b_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BhSequence {
    group: AbelianGroup,
    elements: Vec<GroupElement>,
    params: CodeParams,
}

/// Outcome of an injectivity check of the syndrome map on the error sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Injectivity {
    Injective,
    Collides(Collision),
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }

    pub fn collision(&self) -> Option<&Collision> {
        match self {
            Injectivity::Injective => None,
            Injectivity::Collides(c) => Some(c),
        }
    }
}

impl BhSequence {
    pub fn new(group: AbelianGroup, elements: Vec<GroupElement>, t: usize, ell: u64) -> Result<Self> {
        let params = CodeParams::new(elements.len(), t, ell)?;
        if let Some(bad) = elements.iter().find(|e| !group.contains(e)) {
            return Err(Error::InvalidElement(format!("{bad:?} is not an element of {group}")));
        }
        Ok(BhSequence { group, elements, params })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn t(&self) -> usize {
        self.params.t()
    }

    pub fn ell(&self) -> u64 {
        self.params.ell()
    }

    /// Same elements, different claimed capability.
    pub fn with_params(&self, t: usize, ell: u64) -> Result<Self> {
        Self::new(self.group.clone(), self.elements.clone(), t, ell)
    }

    /// `|G| = |S(n, t, l)|`, the perfect-code volume condition.
    pub fn has_perfect_order(&self) -> Result<bool> {
        Ok(sphere_size(&self.params)? == self.group.order())
    }
}

/// `sum_j e_j * b_j` in `G`; the syndrome of the word `e`.
pub fn weighted_sum(seq: &BhSequence, e: &[u64]) -> Result<GroupElement> {
    if e.len() != seq.n() {
        return Err(Error::LengthMismatch { expected: seq.n(), got: e.len() });
    }
    let g = &seq.group;
    let mut acc = g.zero();
    for (&coef, b) in e.iter().zip(&seq.elements) {
        if coef != 0 {
            acc = g.add(&acc, &g.scale(b, coef as u128));
        }
    }
    Ok(acc)
}

/// Precomputed `a * b_j` for every position `j` and coefficient `a`, so a
/// syndrome costs `n` table lookups and additions.
///
/// Coefficients are taken modulo `period = min(l + 1, exponent of G)`, which
/// keeps the table no larger than the sphere or the group.
pub(crate) struct SyndromeKernel {
    factors: Vec<u128>,
    period: usize,
    // multiples[(j * period + a) * k + c]
    multiples: Vec<u128>,
}

impl SyndromeKernel {
    pub(crate) fn new(seq: &BhSequence) -> Self {
        let factors = seq.group.factors().to_vec();
        let k = factors.len();
        let exponent = factors.last().copied().unwrap_or(1);
        let period = (seq.ell() as u128 + 1).min(exponent) as usize;
        let mut multiples = Vec::with_capacity(seq.n() * period * k);
        for b in &seq.elements {
            for a in 0..period as u128 {
                for (c, &d) in b.coords().iter().zip(&factors) {
                    multiples.push(mul_mod(*c, a % d, d));
                }
            }
        }
        SyndromeKernel { factors, period, multiples }
    }

    /// Mixed-radix index of the syndrome of `e`.
    pub(crate) fn index(&self, e: &[u64], scratch: &mut [u128]) -> u128 {
        let k = self.factors.len();
        scratch.iter_mut().for_each(|s| *s = 0);
        for (j, &a) in e.iter().enumerate() {
            let a = (a % self.period as u64) as usize;
            if a == 0 {
                continue;
            }
            let base = (j * self.period + a) * k;
            let row = &self.multiples[base..base + k];
            for ((s, &m), &d) in scratch.iter_mut().zip(row).zip(&self.factors) {
                *s = add_mod(*s, m, d);
            }
        }
        scratch.iter().zip(&self.factors).fold(0u128, |acc, (&c, &d)| acc * d + c)
    }

    pub(crate) fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Injectivity of `e -> weighted_sum(seq, e)` over `S(n, t, l)`.
///
/// Walks the sphere in lexicographic order; on failure the witness is the
/// first vector whose syndrome was already taken, paired with the earlier
/// vector that took it. At most `|G| + 1` vectors are ever visited.
pub fn verify_bh(seq: &BhSequence) -> Result<Injectivity> {
    let params = seq.params();
    let size = sphere_size(&params)?;
    let visits = size.min(bound::uadd(seq.group.order(), 1)?);
    if visits > ENUMERATION_CAP {
        return Err(Error::EnumerationCap { needed: visits, cap: ENUMERATION_CAP });
    }
    let kernel = SyndromeKernel::new(seq);
    let mut scratch = vec![0u128; kernel.rank()];
    let mut seen: HashMap<u128, usize> = HashMap::with_capacity(visits as usize);
    for (ordinal, e) in enumerate_sphere(&params)?.enumerate() {
        let s = kernel.index(e.entries(), &mut scratch);
        if let Some(&earlier) = seen.get(&s) {
            let prior = enumerate_sphere(&params)?.nth(earlier).expect("earlier vector exists");
            return Ok(Injectivity::Collides(Collision { found: e, prior }));
        }
        seen.insert(s, ordinal);
    }
    Ok(Injectivity::Injective)
}

/// Convenience wrapper: `verify_bh` as a boolean.
pub fn is_bh(seq: &BhSequence) -> Result<bool> {
    Ok(verify_bh(seq)?.is_injective())
}
