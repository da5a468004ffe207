//! Exact integer and modular arithmetic, and integer-matrix normal forms.

pub mod bound;
mod matrix;
mod modular;
mod normal_form;

pub use bound::{magnitude_bits, BITS_ENV, MAX_BITS};
pub use matrix::IntMatrix;
pub use modular::{
    add_mod, element_order, gcd, gcd_i, mod_inverse, mul_mod, order_at_most, pow_mod, sub_mod, ORDER_ITERATION_CAP,
};
pub use normal_form::{hermite_normal_form, hnf_with_transform, smith_normal_form, NormalFormResult};

/// `|det G|`, exact.
pub fn abs_det(g: &IntMatrix) -> crate::Result<u128> {
    g.abs_det()
}
