//! `B_t[l](G)` sequences over finite abelian groups: elements `b_1..b_n`
//! whose weighted sums `sum a_j b_j`, `a_j` in `[0, l]` with at most `t`
//! nonzero, are pairwise distinct.

mod bh;
mod construct;
mod group;
mod search;

pub use bh::{is_bh, verify_bh, weighted_sum, BhSequence, Injectivity, ENUMERATION_CAP};
pub use construct::{
    check_l_properties, construct_perfect_sequence, construct_trivial_full_cube, perfect_modulus, LProperties,
};
pub use group::{AbelianGroup, GroupElement};
pub use search::{search_bh, SearchLimits};
