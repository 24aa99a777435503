use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{GaussQ, Rational, ScalarError};

/// One of the three real surds adjoined to the Gaussian rationals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Surd {
    /// `c0`, with `c0² = 32/257`.
    C0,
    /// `y0`, with `y0² = 257/32 - 5729/2304 = 12775/2304`; taken positive.
    Y0,
    /// `s2 = √2`.
    S2,
}

impl Surd {
    pub const ALL: [Surd; 3] = [Surd::C0, Surd::Y0, Surd::S2];

    const fn bit(self) -> u8 {
        match self {
            Surd::C0 => 1,
            Surd::Y0 => 2,
            Surd::S2 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Surd::C0 => "c0",
            Surd::Y0 => "y0",
            Surd::S2 => "s2",
        }
    }

    /// The reduction relation `surd² → square()`.
    pub fn square(self) -> Rational {
        match self {
            Surd::C0 => Rational::frac(32, 257),
            Surd::Y0 => &Rational::frac(257, 32) - &Rational::frac(5729, 2304),
            Surd::S2 => Rational::integer(2),
        }
    }

    pub fn to_f64(self) -> f64 {
        libm::sqrt(self.square().to_f64())
    }
}

impl FromStr for Surd {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c0" => Ok(Surd::C0),
            "y0" => Ok(Surd::Y0),
            "s2" => Ok(Surd::S2),
            other => Err(ScalarError::UnknownSymbol(other.to_string())),
        }
    }
}

/// Square-free monomial in the surds, encoded as a bitmask (bit0 = c0,
/// bit1 = y0, bit2 = s2). Index 0 is the constant monomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn all() -> impl Iterator<Item = Monomial> {
        (0u8..8).map(Monomial)
    }

    pub fn of(surds: &[Surd]) -> Monomial {
        Monomial(surds.iter().fold(0, |m, s| m ^ s.bit()))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, s: Surd) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn surds(self) -> impl Iterator<Item = Surd> {
        Surd::ALL.into_iter().filter(move |s| self.contains(*s))
    }

    /// Product of the squares of the surds in this monomial.
    pub fn square(self) -> Rational {
        self.surds().fold(Rational::one(), |acc, s| &acc * &s.square())
    }

    /// `self · rhs = factor · monomial` after reduction.
    fn times(self, rhs: Monomial) -> (Rational, Monomial) {
        (Monomial(self.0 & rhs.0).square(), Monomial(self.0 ^ rhs.0))
    }

    pub fn name(self) -> String {
        let parts: Vec<&str> = self.surds().map(Surd::name).collect();
        parts.join("·")
    }

    pub fn to_f64(self) -> f64 {
        self.surds().map(Surd::to_f64).product()
    }
}

/// Element of `Q(i)[c0, y0, s2]` modulo the three reduction relations.
///
/// Stored in normal form: one Gaussian-rational coordinate per square-free
/// monomial, so equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CoeffElem {
    coords: [GaussQ; 8],
}

impl CoeffElem {
    pub fn zero() -> Self {
        CoeffElem::default()
    }

    pub fn one() -> Self {
        GaussQ::one().into()
    }

    pub fn i() -> Self {
        GaussQ::i().into()
    }

    pub fn int(n: i64) -> Self {
        Rational::integer(n).into()
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Rational::frac(n, d).into()
    }

    pub fn surd(s: Surd) -> Self {
        CoeffElem::monomial(Monomial::of(&[s]), GaussQ::one())
    }

    /// Embed a surd by name; only `c0`, `y0`, `s2` are ring generators.
    pub fn symbol(name: &str) -> Result<Self, ScalarError> {
        Ok(CoeffElem::surd(name.parse()?))
    }

    pub fn monomial(m: Monomial, c: GaussQ) -> Self {
        let mut e = CoeffElem::zero();
        e.coords[m.index()] = c;
        e
    }

    pub fn coord(&self, m: Monomial) -> &GaussQ {
        &self.coords[m.index()]
    }

    /// Nonzero `(monomial, coefficient)` pairs in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &GaussQ)> {
        Monomial::all()
            .zip(self.coords.iter())
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussQ::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(GaussQ::is_real)
    }

    /// The value as a Gaussian rational, if no surd monomial is present.
    pub fn as_gauss(&self) -> Option<&GaussQ> {
        self.coords[1..]
            .iter()
            .all(GaussQ::is_zero)
            .then(|| &self.coords[0])
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| &g.re)
    }

    /// Conjugates the Gaussian coordinates; the surds are real and fixed.
    pub fn conj(&self) -> Self {
        CoeffElem {
            coords: self.coords.clone().map(|c| c.conj()),
        }
    }

    pub fn scale(&self, k: &GaussQ) -> Self {
        if k.is_zero() {
            return CoeffElem::zero();
        }
        CoeffElem {
            coords: self.coords.clone().map(|c| if c.is_zero() { c } else { &c * k }),
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.scale(&GaussQ::real(k.clone()))
    }

    /// Inverse of a single-term element `g·m` as `g⁻¹·m / m²`.
    pub fn recip_monomial(&self) -> Result<Self, ScalarError> {
        let mut terms = self.terms();
        let (m, g) = terms.next().ok_or(ScalarError::DivisionByZero)?;
        if terms.next().is_some() {
            return Err(ScalarError::NotInvertible);
        }
        let inv = g.recip()?.scale(&m.square().recip()?);
        Ok(CoeffElem::monomial(m, inv))
    }

    /// `√q` inside the ring, when `q / m²` is a rational square for some
    /// monomial `m`. Negative inputs yield imaginary roots.
    pub fn sqrt_rational(q: &Rational) -> Option<Self> {
        if q.is_zero() {
            return Some(CoeffElem::zero());
        }
        let (mag, unit) = if q.is_negative() {
            (-q, GaussQ::i())
        } else {
            (q.clone(), GaussQ::one())
        };
        Monomial::all().find_map(|m| {
            let rest = mag.checked_div(&m.square()).ok()?;
            let r = rest.sqrt_exact()?;
            Some(CoeffElem::monomial(m, unit.scale(&r)))
        })
    }

    /// Numeric value with `c0`, `y0`, `s2` evaluated as positive reals.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        self.terms().fold((0.0, 0.0), |(re, im), (m, c)| {
            let w = m.to_f64();
            let (cr, ci) = c.to_f64_pair();
            (re + w * cr, im + w * ci)
        })
    }

    /// Text form `a + b·c0 + c·y0 + d·s2 + …` with `p/q` coefficients.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, body) = term_text(m, c);
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// True when the rendered form is a single signed term, so it can be
    /// juxtaposed with a symbol without parentheses.
    pub fn is_single_term(&self) -> bool {
        let mut it = self.terms();
        matches!((it.next(), it.next()), (Some((_, c)), None) if c.re.is_zero() || c.im.is_zero())
    }
}

/// Returns `(negative, text)` for one term, with the sign pulled out.
fn term_text(m: Monomial, c: &GaussQ) -> (bool, String) {
    let pure_neg = (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative());
    let c = if pure_neg { -c } else { c.clone() };
    let coef = c.render();
    let body = if m == Monomial::ONE {
        coef
    } else if c == GaussQ::one() {
        m.name()
    } else {
        alloc::format!("{}·{}", coef, m.name())
    };
    (pure_neg, body)
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<GaussQ> for CoeffElem {
    fn from(g: GaussQ) -> Self {
        CoeffElem::monomial(Monomial::ONE, g)
    }
}

impl From<Rational> for CoeffElem {
    fn from(r: Rational) -> Self {
        GaussQ::real(r).into()
    }
}

impl From<Surd> for CoeffElem {
    fn from(s: Surd) -> Self {
        CoeffElem::surd(s)
    }
}

impl Add<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn add(self, rhs: &CoeffElem) -> CoeffElem {
        let mut out = self.clone();
        for (o, r) in out.coords.iter_mut().zip(rhs.coords.iter()) {
            if !r.is_zero() {
                *o = &*o + r;
            }
        }
        out
    }
}

impl Sub<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn sub(self, rhs: &CoeffElem) -> CoeffElem {
        let mut out = self.clone();
        for (o, r) in out.coords.iter_mut().zip(rhs.coords.iter()) {
            if !r.is_zero() {
                *o = &*o - r;
            }
        }
        out
    }
}

impl Mul<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn mul(self, rhs: &CoeffElem) -> CoeffElem {
        let mut out = CoeffElem::zero();
        for (p, a) in self.terms() {
            for (q, b) in rhs.terms() {
                let (factor, m) = p.times(q);
                let t = (a * b).scale(&factor);
                out.coords[m.index()] = &out.coords[m.index()] + &t;
            }
        }
        out
    }
}

impl Neg for &CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        CoeffElem {
            coords: self.coords.clone().map(|c| -c),
        }
    }
}

impl Add for CoeffElem {
    type Output = CoeffElem;
    fn add(self, rhs: CoeffElem) -> CoeffElem {
        &self + &rhs
    }
}

impl Sub for CoeffElem {
    type Output = CoeffElem;
    fn sub(self, rhs: CoeffElem) -> CoeffElem {
        &self - &rhs
    }
}

impl Mul for CoeffElem {
    type Output = CoeffElem;
    fn mul(self, rhs: CoeffElem) -> CoeffElem {
        &self * &rhs
    }
}

impl Neg for CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c0() -> CoeffElem {
        CoeffElem::surd(Surd::C0)
    }
    fn y0() -> CoeffElem {
        CoeffElem::surd(Surd::Y0)
    }
    fn s2() -> CoeffElem {
        CoeffElem::surd(Surd::S2)
    }

    #[test]
    fn surd_reductions() {
        assert_eq!(&c0() * &c0(), CoeffElem::frac(32, 257));
        assert_eq!(&y0() * &y0(), CoeffElem::frac(12775, 2304));
        assert_eq!(&s2() * &s2(), CoeffElem::int(2));
    }

    #[test]
    fn y0_square_from_defining_difference() {
        let expected = &Rational::frac(257, 32) - &Rational::frac(5729, 2304);
        assert_eq!(expected, Rational::frac(12775, 2304));
    }

    #[test]
    fn mixed_products_are_confluent() {
        let lhs = &(&c0() * &y0()) * &s2();
        let rhs = &c0() * &(&y0() * &s2());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, CoeffElem::monomial(Monomial::of(&[Surd::C0, Surd::Y0, Surd::S2]), GaussQ::one()));
        let sq = &lhs * &lhs;
        let expected = Rational::frac(32, 257) * Rational::frac(12775, 2304) * Rational::integer(2);
        assert_eq!(sq, CoeffElem::from(expected));
    }

    #[test]
    fn embedding() {
        let r = Rational::frac(32, 257);
        let e = CoeffElem::from(r.clone());
        assert_eq!(e.as_rational(), Some(&r));
        assert_eq!(CoeffElem::symbol("c0").unwrap(), c0());
        assert_eq!(
            CoeffElem::symbol("x"),
            Err(ScalarError::UnknownSymbol("x".into()))
        );
    }

    #[test]
    fn conj_fixes_surds() {
        let z = &CoeffElem::from(GaussQ::int(1, 2)) * &c0();
        let expected = &CoeffElem::from(GaussQ::int(1, -2)) * &c0();
        assert_eq!(z.conj(), expected);
        assert_eq!(c0().conj(), c0());
    }

    #[test]
    fn ring_square_roots() {
        assert_eq!(CoeffElem::sqrt_rational(&Rational::integer(2)), Some(s2()));
        assert_eq!(CoeffElem::sqrt_rational(&Rational::frac(1, 4)), Some(CoeffElem::frac(1, 2)));
        assert_eq!(CoeffElem::sqrt_rational(&Rational::frac(32, 257)), Some(c0()));
        assert_eq!(CoeffElem::sqrt_rational(&Rational::integer(-1)), Some(CoeffElem::i()));
        assert_eq!(CoeffElem::sqrt_rational(&Rational::integer(3)), None);
    }

    #[test]
    fn monomial_inverse() {
        let inv = c0().recip_monomial().unwrap();
        assert_eq!(&inv * &c0(), CoeffElem::one());
        assert_eq!(inv, CoeffElem::monomial(Monomial::of(&[Surd::C0]), GaussQ::real(Rational::frac(257, 32))));
        assert!((c0() + CoeffElem::one()).recip_monomial().is_err());
    }

    #[test]
    fn render() {
        assert_eq!(CoeffElem::zero().render(), "0");
        assert_eq!(CoeffElem::frac(32, 257).render(), "32/257");
        let e = CoeffElem::frac(1, 2) + c0().scale(&GaussQ::int(-3, 0)) + s2();
        assert_eq!(e.render(), "1/2 - 3·c0 + s2");
        let f = (&c0() * &y0()).scale(&GaussQ::int(1, 1));
        assert_eq!(f.render(), "(1 + i)·c0·y0");
        assert_eq!((-CoeffElem::i()).render(), "-i");
    }

    #[test]
    fn numeric_value() {
        let (re, im) = (&c0() * &s2()).to_f64_pair();
        assert!((re - (64.0f64 / 257.0).sqrt()).abs() < 1e-15);
        assert_eq!(im, 0.0);
    }
}
