//! Entry-level traits shared by every coefficient type that can sit inside
//! a [`Mat2`](crate::octonion::Mat2) or [`Zorn`](crate::octonion::Zorn).

use core::fmt::Debug;

use num_complex::Complex64;

use crate::scalar::{CoeffElem, GaussQ};

/// Additive group with the two fixed scalings the star product needs.
pub trait Entry: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / 2`
    fn halved(&self) -> Self;
    /// `i · self`
    fn times_i(&self) -> Self;
}

/// Bilinear product between two entry types.
pub trait Product<Rhs = Self> {
    type Output: Entry;
    fn product(&self, rhs: &Rhs) -> Self::Output;
}

pub trait Conjugate {
    type Output;
    fn conjugate(&self) -> Self::Output;
}

/// A commutative coefficient field (or ring) embedding the Gaussian rationals.
pub trait Scalar: Entry + Product<Self, Output = Self> + Conjugate<Output = Self> {
    fn one() -> Self;
    fn from_gauss(g: &GaussQ) -> Self;

    fn mul(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
}

impl Entry for GaussQ {
    fn zero() -> Self {
        GaussQ::zero()
    }
    fn is_zero(&self) -> bool {
        GaussQ::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn halved(&self) -> Self {
        self.scale(&crate::scalar::Rational::frac(1, 2))
    }
    fn times_i(&self) -> Self {
        GaussQ::times_i(self)
    }
}

impl Product for GaussQ {
    type Output = GaussQ;
    fn product(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Conjugate for GaussQ {
    type Output = GaussQ;
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl Scalar for GaussQ {
    fn one() -> Self {
        GaussQ::one()
    }
    fn from_gauss(g: &GaussQ) -> Self {
        g.clone()
    }
}

impl Entry for CoeffElem {
    fn zero() -> Self {
        CoeffElem::zero()
    }
    fn is_zero(&self) -> bool {
        CoeffElem::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn halved(&self) -> Self {
        self.scale_rational(&crate::scalar::Rational::frac(1, 2))
    }
    fn times_i(&self) -> Self {
        self.scale(&GaussQ::i())
    }
}

impl Product for CoeffElem {
    type Output = CoeffElem;
    fn product(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Conjugate for CoeffElem {
    type Output = CoeffElem;
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl Scalar for CoeffElem {
    fn one() -> Self {
        CoeffElem::one()
    }
    fn from_gauss(g: &GaussQ) -> Self {
        g.clone().into()
    }
}

impl Entry for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn halved(&self) -> Self {
        self * 0.5
    }
    fn times_i(&self) -> Self {
        Complex64::new(-self.im, self.re)
    }
}

impl Product for Complex64 {
    type Output = Complex64;
    fn product(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Conjugate for Complex64 {
    type Output = Complex64;
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl Scalar for Complex64 {
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_gauss(g: &GaussQ) -> Self {
        let (re, im) = g.to_f64_pair();
        Complex64::new(re, im)
    }
}
