#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod algebra;
pub mod couplings;
pub mod fermion;
pub mod field;
pub mod octonion;
pub mod scalar;
