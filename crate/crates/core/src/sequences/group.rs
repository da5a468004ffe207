use std::fmt;

use crate::error::{Error, Result};
use crate::integers::{add_mod, bound, mul_mod, sub_mod};

/// Finite abelian group `Z_{d_1} x ... x Z_{d_k}` with `d_1 | d_2 | ... | d_k`,
/// every `d_i >= 2`. The empty factor list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<u128>,
    order: u128,
}

/// Coordinates of a group element, coordinate `i` in `[0, d_i)`.
///
/// The derived ordering is coordinate-lexicographic, which is the order the
/// search walks candidates in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u128>);

impl GroupElement {
    pub fn coords(&self) -> &[u128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl AbelianGroup {
    pub fn new(factors: Vec<u128>) -> Result<Self> {
        let mut order: u128 = 1;
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::InvalidGroup(format!("invariant factor {d} must be at least 2")));
            }
            if i > 0 && d % factors[i - 1] != 0 {
                return Err(Error::InvalidGroup(format!(
                    "invariant factors {:?} do not form a divisibility chain",
                    factors
                )));
            }
            order = bound::umul(order, d)?;
        }
        Ok(AbelianGroup { factors, order })
    }

    /// `Z_m`; `m = 1` gives the trivial group.
    pub fn cyclic(m: u128) -> Result<Self> {
        match m {
            0 => Err(Error::InvalidGroup("order must be positive".into())),
            1 => Self::new(vec![]),
            _ => Self::new(vec![m]),
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![], order: 1 }
    }

    pub fn factors(&self) -> &[u128] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    pub fn element(&self, coords: Vec<u128>) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidElement(format!(
                "{} coordinates given for a group with {} factors",
                coords.len(),
                self.factors.len()
            )));
        }
        for (c, d) in coords.iter().zip(&self.factors) {
            if c >= d {
                return Err(Error::InvalidElement(format!("coordinate {c} out of range for Z_{d}")));
            }
        }
        Ok(GroupElement(coords))
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn reduce(&self, coords: &[i128]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidElement(format!(
                "{} coordinates given for a group with {} factors",
                coords.len(),
                self.factors.len()
            )));
        }
        Ok(GroupElement(coords.iter().zip(&self.factors).map(|(&c, &d)| c.rem_euclid(d as i128) as u128).collect()))
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.0.len() == self.factors.len() && e.0.iter().zip(&self.factors).all(|(c, d)| c < d)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).zip(&self.factors).map(|((&x, &y), &d)| add_mod(x, y, d)).collect())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).zip(&self.factors).map(|((&x, &y), &d)| sub_mod(x, y, d)).collect())
    }

    pub fn scale(&self, a: &GroupElement, k: u128) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.factors).map(|(&x, &d)| mul_mod(x, k % d, d)).collect())
    }

    /// Mixed-radix rank of `e`, first coordinate most significant, so index
    /// order equals coordinate-lexicographic order.
    pub fn index_of(&self, e: &GroupElement) -> u128 {
        e.0.iter().zip(&self.factors).fold(0u128, |acc, (&c, &d)| acc * d + c)
    }

    pub fn element_at(&self, mut index: u128) -> GroupElement {
        let mut coords = vec![0u128; self.factors.len()];
        for (c, &d) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index % d;
            index /= d;
        }
        GroupElement(coords)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z_1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}
