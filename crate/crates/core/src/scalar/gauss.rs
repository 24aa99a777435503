use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;
use alloc::string::String;

use super::{Rational, ScalarError};

/// Gaussian rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GaussQ {
    pub re: Rational,
    pub im: Rational,
}

impl GaussQ {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussQ { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussQ { re, im: Rational::zero() }
    }

    pub fn int(re: i64, im: i64) -> Self {
        GaussQ::new(Rational::integer(re), Rational::integer(im))
    }

    pub fn zero() -> Self {
        GaussQ::default()
    }

    pub fn one() -> Self {
        GaussQ::int(1, 0)
    }

    pub fn i() -> Self {
        GaussQ::int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussQ::new(self.re.clone(), -&self.im)
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussQ::new(&self.re * k, &self.im * k)
    }

    pub fn times_i(&self) -> Self {
        GaussQ::new(-&self.im, self.re.clone())
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let inv = n.recip()?;
        Ok(self.conj().scale(&inv))
    }

    pub fn checked_div(&self, rhs: &GaussQ) -> Result<Self, ScalarError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Text form: `3/2`, `i`, `-5i/4`, `(1 + 2i)`.
    ///
    /// Values with both parts nonzero are parenthesized so they can be
    /// juxtaposed with a monomial or basis symbol.
    pub fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => format!("{}", self.re),
            (true, false) => render_imag(&self.im),
            (false, false) => {
                let im = render_imag(&self.im.abs());
                let sign = if self.im.is_negative() { '-' } else { '+' };
                format!("({} {} {})", self.re, sign, im)
            }
        }
    }
}

fn render_imag(im: &Rational) -> String {
    let sign = if im.is_negative() { "-" } else { "" };
    let a = im.abs();
    let n = a.numer();
    let d = a.denom();
    let num = if n == num_bigint::BigInt::from(1) {
        String::from("i")
    } else {
        format!("{}i", n)
    };
    if a.is_integer() {
        format!("{sign}{num}")
    } else {
        format!("{sign}{num}/{d}")
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Rational> for GaussQ {
    fn from(r: Rational) -> Self {
        GaussQ::real(r)
    }
}

impl Add<&GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn sub(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: &GaussQ) -> GaussQ {
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        GaussQ::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ::new(-&self.re, -&self.im)
    }
}

impl Add for GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: GaussQ) -> GaussQ {
        &self + &rhs
    }
}

impl Sub for GaussQ {
    type Output = GaussQ;
    fn sub(self, rhs: GaussQ) -> GaussQ {
        &self - &rhs
    }
}

impl Mul for GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: GaussQ) -> GaussQ {
        &self * &rhs
    }
}

impl Neg for GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        -&self
    }
}
