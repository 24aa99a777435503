//! Scalar potential, vacuum, gauge-boson mass matrix and spectrum, and the
//! assembled term table of the broken-phase Lagrangian.

mod basis;
mod mass;
mod spectrum;
mod terms;
mod vacuum;

use core::fmt;

use crate::octonion::OctonionError;
use crate::scalar::Rational;

pub use basis::{boson_basis_change, boson_basis_inverse, NamedBosons};
pub use mass::{
    mass_matrix, mass_matrix_unit, mass_tensor, ordering_report, MassMatrix, MassOrder, OrderingReport,
};
pub use spectrum::{diag, spectrum, Spectrum};
pub use terms::{d_basis_mass, lagrangian_terms, DMass, FormalScale, LagrangianTerm, Sector, TermClass, TermTable};
pub use vacuum::{
    higgs_param, higgs_param_exact, potential_exact, potential_f64, potential_of_norm, radial_minimize, vacuum_direction,
    vacuum_norm_sq, vacuum_scale_sq, vacuum_state, vacuum_state_f64,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NonPositive(&'static str),
    /// A required surd is outside the coefficient ring.
    NotRepresentable(&'static str),
    InvalidTolerance,
    NotSquare,
    NotSymmetric { row: usize, col: usize },
    NoConvergence,
    /// A basis change would divide by zero while the affected fields are nonzero.
    Degenerate(&'static str),
    Octonion(OctonionError),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPositive(p) => write!(f, "parameter {p} must be positive"),
            FieldError::NotRepresentable(what) => write!(f, "{what} is not representable in the coefficient ring"),
            FieldError::InvalidTolerance => f.write_str("tolerance must be positive"),
            FieldError::NotSquare => f.write_str("matrix is not square"),
            FieldError::NotSymmetric { row, col } => write!(f, "matrix is not symmetric at ({row}, {col})"),
            FieldError::NoConvergence => f.write_str("eigenvalue iteration did not converge"),
            FieldError::Degenerate(what) => write!(f, "degenerate basis change: {what}"),
            FieldError::Octonion(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FieldError {}

impl From<OctonionError> for FieldError {
    fn from(e: OctonionError) -> Self {
        FieldError::Octonion(e)
    }
}

/// Mass parameter `m` and quartic coupling `f`, both positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldParams {
    m: Rational,
    f: Rational,
}

impl FieldParams {
    pub fn new(m: Rational, f: Rational) -> Result<Self, FieldError> {
        if !m.is_positive() {
            return Err(FieldError::NonPositive("m"));
        }
        if !f.is_positive() {
            return Err(FieldError::NonPositive("f"));
        }
        Ok(FieldParams { m, f })
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn f(&self) -> &Rational {
        &self.f
    }

    /// `m²/f`
    pub fn m2_over_f(&self) -> Rational {
        &(&self.m * &self.m) / &self.f
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.m.to_f64(), self.f.to_f64())
    }
}

impl Default for FieldParams {
    fn default() -> Self {
        FieldParams { m: Rational::one(), f: Rational::one() }
    }
}
