//! The octonion algebra in two representations: coordinates over
//! `e⁰..e⁷` and Zorn-type abstract matrices with the star product.

mod coord;
mod mat2;
mod ops;
mod tables;
mod zorn;

use core::fmt;

pub use coord::OctCoord;
pub use mat2::{commutator, Mat2};
pub use ops::{associator, quad_trace, split3, triple_associator_trace, NonAssociative, Split3};
pub use tables::{expected_sigma_product, generator_product, sort_with_parity, EpsTable, EpsTable3, EpsTable4, GenProduct};
pub use zorn::{Block, Zorn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OctonionError {
    IndexOutOfRange(usize),
    /// The named block has nonzero trace, so the element is outside the octonion span.
    NotOctonionic(Block),
    RepeatedIndex,
    InconsistentSign,
}

impl fmt::Display for OctonionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OctonionError::IndexOutOfRange(k) => write!(f, "generator index {k} outside 0..7"),
            OctonionError::NotOctonionic(b) => write!(f, "block {b:?} is not traceless; element is outside the octonion span"),
            OctonionError::RepeatedIndex => f.write_str("repeated index in antisymmetric symbol"),
            OctonionError::InconsistentSign => f.write_str("inconsistent signs in antisymmetric table"),
        }
    }
}

impl core::error::Error for OctonionError {}
