//! Perfect codes for asymmetric limited-magnitude errors.
//!
//! A word over `{0, ..., q-1}` suffers at most `t` errors, each raising one
//! cell by at most `l`. Linear codes correcting such errors are handled in
//! three equivalent forms:
//!
//! * a lattice `L` in `Z^n` whose translates of the error sphere
//!   `S(n, t, l)` are disjoint ([`lattice`]);
//! * a `B_t[l](G)` sequence in a finite abelian group, the syndrome map
//!   `e -> sum e_i b_i` being injective on the sphere ([`sequences`]);
//! * a finite codebook `(X + L) ∩ [0, sigma)^n` decoded by table lookup
//!   ([`codec`]).
//!
//! Perfect codes (tilings) exist for `t = n` and, by an explicit
//! construction, for `t = n - 1` and every `l`; [`analysis`] checks the
//! divisibility obstruction for `t = n - 2` and surveys small parameters.

pub mod analysis;
pub mod codec;
mod error;
pub mod integers;
pub mod lattice;
pub mod sequences;
pub mod sphere;

pub use error::{Collision, Error, Result};
pub use sphere::{enumerate_sphere, is_in_sphere, sphere_size, CodeParams, ErrorVector};
