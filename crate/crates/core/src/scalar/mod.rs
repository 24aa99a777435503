//! Exact scalars: rationals, Gaussian rationals and the surd extension ring.

mod coeff;
mod gauss;
mod rational;

use core::fmt;

use alloc::string::String;

pub use coeff::{CoeffElem, Monomial, Surd};
pub use gauss::GaussQ;
pub use rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    ZeroDenominator,
    NotInvertible,
    UnknownSymbol(String),
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => f.write_str("division by zero"),
            ScalarError::ZeroDenominator => f.write_str("zero denominator"),
            ScalarError::NotInvertible => f.write_str("element is not a single invertible term"),
            ScalarError::UnknownSymbol(s) => write!(f, "unknown ring generator `{s}` (expected c0, y0 or s2)"),
            ScalarError::Parse(s) => write!(f, "cannot parse `{s}` as a rational"),
        }
    }
}

impl core::error::Error for ScalarError {}
