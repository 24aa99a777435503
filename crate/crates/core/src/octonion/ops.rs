//! Associators, the associative/non-associative split, and the four-index trace.

use crate::algebra::Scalar;
use crate::scalar::GaussQ;

use super::{OctCoord, OctonionError, Zorn};

/// A (possibly non-associative) algebra with a bilinear product.
pub trait NonAssociative: Clone {
    fn mul(&self, rhs: &Self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn halved(&self) -> Self;
}

impl<T: Scalar> NonAssociative for Zorn<T> {
    fn mul(&self, rhs: &Self) -> Self {
        self.star(rhs)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Zorn::plus(self, rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Zorn::minus(self, rhs)
    }
    fn halved(&self) -> Self {
        Zorn::halved(self)
    }
}

impl<T: Scalar> NonAssociative for OctCoord<T> {
    fn mul(&self, rhs: &Self) -> Self {
        OctCoord::mul(self, rhs)
    }
    fn plus(&self, rhs: &Self) -> Self {
        OctCoord::plus(self, rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        OctCoord::minus(self, rhs)
    }
    fn halved(&self) -> Self {
        OctCoord::halved(self)
    }
}

/// `{a, b, c} = (ab)c − a(bc)`.
pub fn associator<A: NonAssociative>(a: &A, b: &A, c: &A) -> A {
    a.mul(b).mul(c).minus(&a.mul(&b.mul(c)))
}

/// Associative and non-associative parts of a triple product.
#[derive(Clone, PartialEq, Debug)]
pub struct Split3<A> {
    /// `½((ab)c + a(bc))`
    pub assoc: A,
    /// `½((ab)c − a(bc))`
    pub nonassoc: A,
}

pub fn split3<A: NonAssociative>(a: &A, b: &A, c: &A) -> Split3<A> {
    let left = a.mul(b).mul(c);
    let right = a.mul(&b.mul(c));
    Split3 {
        assoc: left.plus(&right).halved(),
        nonassoc: left.minus(&right).halved(),
    }
}

/// `tr(Σᵃ * {Σᵇ, Σᶜ, Σᵈ} − {Σᵃ, Σᵇ, Σᶜ} * Σᵈ)` with the block trace.
pub fn quad_trace(a: usize, b: usize, c: usize, d: usize) -> Result<GaussQ, OctonionError> {
    let s = |k| Zorn::<GaussQ>::sigma(k);
    let (sa, sb, sc, sd) = (s(a)?, s(b)?, s(c)?, s(d)?);
    let first = sa.star(&associator(&sb, &sc, &sd));
    let second = associator(&sa, &sb, &sc).star(&sd);
    Ok(first.minus(&second).trace())
}

/// `tr{Σᵃ, Σᵇ, Σᶜ}`.
pub fn triple_associator_trace(a: usize, b: usize, c: usize) -> Result<GaussQ, OctonionError> {
    let s = |k| Zorn::<GaussQ>::sigma(k);
    Ok(associator(&s(a)?, &s(b)?, &s(c)?).trace())
}
