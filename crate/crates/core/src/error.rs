use std::fmt;

use crate::sphere::ErrorVector;

/// A pair of distinct sphere vectors that map to the same syndrome.
///
/// `found` is the lexicographically first sphere vector whose syndrome was
/// already taken; `prior` is the earlier vector that took it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub found: ErrorVector,
    pub prior: ErrorVector,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} and {:?}", self.found.entries(), self.prior.entries())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter overflow: a value exceeds the {bits}-bit magnitude bound")]
    Overflow { bits: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("{value} is not a unit modulo {modulus}")]
    NotCoprime { value: u128, modulus: u128 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("enumeration cap exceeded: {needed} items requested, cap is {cap}")]
    EnumerationCap { needed: u128, cap: u128 },
    #[error("search cap exceeded after visiting {nodes} nodes")]
    SearchCap { nodes: u64 },
    #[error("sequence is not a B_t[l] sequence: {0} collide")]
    NotBh(Collision),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
