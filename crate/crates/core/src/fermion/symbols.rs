use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Conjugate, Entry, Product};
use crate::scalar::CoeffElem;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Particle {
    Nu,
    E,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Chirality {
    L,
    R,
}

/// A lepton field symbol. Neutrinos are left-handed only.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FermionSym {
    pub particle: Particle,
    pub chirality: Chirality,
    pub barred: bool,
}

impl FermionSym {
    pub const NU_L: FermionSym = FermionSym { particle: Particle::Nu, chirality: Chirality::L, barred: false };
    pub const E_L: FermionSym = FermionSym { particle: Particle::E, chirality: Chirality::L, barred: false };
    pub const E_R: FermionSym = FermionSym { particle: Particle::E, chirality: Chirality::R, barred: false };

    /// `None` for a right-handed neutrino.
    pub fn new(particle: Particle, chirality: Chirality, barred: bool) -> Option<Self> {
        if particle == Particle::Nu && chirality == Chirality::R {
            return None;
        }
        Some(FermionSym { particle, chirality, barred })
    }

    pub fn bar(self) -> Self {
        FermionSym { barred: !self.barred, ..self }
    }

    pub fn unbarred(self) -> Self {
        FermionSym { barred: false, ..self }
    }

    /// Plain-text name such as `nuL`, `eR`, `~eL` (tilde marks a bar).
    pub fn ascii(self) -> String {
        let mut s = String::new();
        if self.barred {
            s.push('~');
        }
        s.push_str(match self.particle {
            Particle::Nu => "nu",
            Particle::E => "e",
        });
        s.push(match self.chirality {
            Chirality::L => 'L',
            Chirality::R => 'R',
        });
        s
    }
}

impl fmt::Display for FermionSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.particle {
            Particle::Nu => "ν",
            Particle::E => "e",
        };
        let chir = match self.chirality {
            Chirality::L => "ᴸ",
            Chirality::R => "ᴿ",
        };
        if self.barred {
            write!(f, "{base}\u{304}{chir}")
        } else {
            write!(f, "{base}{chir}")
        }
    }
}

/// `ψ̄ Γ χ` with the Dirac sandwich left implicit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bilinear {
    /// Stored unbarred; rendered with a bar.
    pub bar: FermionSym,
    pub ket: FermionSym,
}

impl Bilinear {
    pub fn new(bar: FermionSym, ket: FermionSym) -> Self {
        Bilinear { bar: bar.unbarred(), ket: ket.unbarred() }
    }

    /// Pairs a barred and an unbarred symbol in either order.
    pub fn pair(x: FermionSym, y: FermionSym) -> Option<Self> {
        match (x.barred, y.barred) {
            (true, false) => Some(Bilinear::new(x, y)),
            (false, true) => Some(Bilinear::new(y, x)),
            _ => None,
        }
    }

    /// The Dirac adjoint swaps the two slots.
    pub fn adjoint(self) -> Self {
        Bilinear { bar: self.ket, ket: self.bar }
    }
}

impl fmt::Display for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.bar.bar(), self.ket)
    }
}

/// Finite formal sum `Σ cᵢ · Bᵢ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BilinearCombo {
    terms: BTreeMap<Bilinear, CoeffElem>,
}

impl BilinearCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(b: Bilinear, c: CoeffElem) -> Self {
        let mut out = Self::new();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: Bilinear, c: CoeffElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&b) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(b, sum);
        }
    }

    pub fn coeff(&self, b: &Bilinear) -> CoeffElem {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bilinear, &CoeffElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &CoeffElem) -> Self {
        let mut out = Self::new();
        for (b, c) in &self.terms {
            out.add_term(*b, k * c);
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&CoeffElem) -> CoeffElem) -> Self {
        let mut out = Self::new();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    /// Sorted `coeff · bar ⊗ ket` terms joined by ` + `, or `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| alloc::format!("({}) · {}", c.render(), b))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for BilinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Entry for BilinearCombo {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn negated(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
    fn halved(&self) -> Self {
        self.map_coeffs(Entry::halved)
    }
    fn times_i(&self) -> Self {
        self.map_coeffs(Entry::times_i)
    }
}

impl Product<BilinearCombo> for CoeffElem {
    type Output = BilinearCombo;
    fn product(&self, rhs: &BilinearCombo) -> BilinearCombo {
        rhs.scale(self)
    }
}

impl Product<CoeffElem> for BilinearCombo {
    type Output = BilinearCombo;
    fn product(&self, rhs: &CoeffElem) -> BilinearCombo {
        self.scale(rhs)
    }
}

/// Degree-one combination `Σ cᵢ ψᵢ` of fermion symbols.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FermionLin {
    terms: BTreeMap<FermionSym, CoeffElem>,
}

impl FermionLin {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of(s: FermionSym, c: CoeffElem) -> Self {
        let mut out = Self::new();
        out.add_term(s, c);
        out
    }

    pub fn sym(s: FermionSym) -> Self {
        Self::of(s, CoeffElem::one())
    }

    pub fn add_term(&mut self, s: FermionSym, c: CoeffElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&s) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(s, sum);
        }
    }

    pub fn coeff(&self, s: &FermionSym) -> CoeffElem {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FermionSym, &CoeffElem)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &CoeffElem) -> Self {
        let mut out = Self::new();
        for (s, c) in &self.terms {
            out.add_term(*s, k * c);
        }
        out
    }

    fn map_coeffs(&self, mut f: impl FnMut(&CoeffElem) -> CoeffElem) -> Self {
        let mut out = Self::new();
        for (s, c) in &self.terms {
            out.add_term(*s, f(c));
        }
        out
    }

    /// Replace every symbol of one particle species by `t` times itself.
    pub fn rescale_particle(&self, p: Particle, t: &CoeffElem) -> Self {
        let mut out = Self::new();
        for (s, c) in &self.terms {
            let c = if s.particle == p { t * c } else { c.clone() };
            out.add_term(*s, c);
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| alloc::format!("({})·{}", c.render(), s))
            .collect();
        parts.join(" + ")
    }
}

impl Entry for FermionLin {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(*s, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn negated(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
    fn halved(&self) -> Self {
        self.map_coeffs(Entry::halved)
    }
    fn times_i(&self) -> Self {
        self.map_coeffs(Entry::times_i)
    }
}

impl Product<CoeffElem> for FermionLin {
    type Output = FermionLin;
    fn product(&self, rhs: &CoeffElem) -> FermionLin {
        self.scale(rhs)
    }
}

impl Product<FermionLin> for CoeffElem {
    type Output = FermionLin;
    fn product(&self, rhs: &FermionLin) -> FermionLin {
        rhs.scale(self)
    }
}

/// Fermion symbols commute as formal tokens, so the pairing of a barred and
/// an unbarred symbol is order-independent.
///
/// # Panics
/// If both factors contain symbols of the same barring.
impl Product for FermionLin {
    type Output = BilinearCombo;
    fn product(&self, rhs: &FermionLin) -> BilinearCombo {
        let mut out = BilinearCombo::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &rhs.terms {
                let b = Bilinear::pair(*x, *y).expect("bilinear needs one barred and one unbarred factor");
                out.add_term(b, cx * cy);
            }
        }
        out
    }
}

/// Complex-conjugates coefficients and toggles the bar.
impl Conjugate for FermionLin {
    type Output = FermionLin;
    fn conjugate(&self) -> FermionLin {
        let mut out = FermionLin::new();
        for (s, c) in &self.terms {
            out.add_term(s.bar(), c.conj());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_right_neutrino() {
        assert!(FermionSym::new(Particle::Nu, Chirality::R, false).is_none());
        assert!(FermionSym::new(Particle::E, Chirality::R, true).is_some());
    }

    #[test]
    fn combo_drops_zeros() {
        let b = Bilinear::new(FermionSym::E_L, FermionSym::NU_L);
        let mut c = BilinearCombo::single(b, CoeffElem::int(3));
        c.add_term(b, CoeffElem::int(-3));
        assert!(c.is_empty());
        c.add_term(b, CoeffElem::zero());
        assert_eq!(c.len(), 0);
    }

    #[test]
    fn pairing_commutes() {
        let nu_bar = FermionLin::sym(FermionSym::NU_L.bar());
        let e = FermionLin::of(FermionSym::E_L, CoeffElem::int(2));
        assert_eq!(nu_bar.product(&e), e.product(&nu_bar));
        let b = Bilinear::new(FermionSym::NU_L, FermionSym::E_L);
        assert_eq!(nu_bar.product(&e).coeff(&b), CoeffElem::int(2));
    }

    #[test]
    fn conjugate_toggles_bar() {
        let x = FermionLin::of(FermionSym::E_L, CoeffElem::i());
        let y = x.conjugate();
        assert_eq!(y.coeff(&FermionSym::E_L.bar()), -CoeffElem::i());
        assert_eq!(y.conjugate(), x);
    }

    #[test]
    fn rendering() {
        let b = Bilinear::new(FermionSym::NU_L, FermionSym::E_L);
        assert_eq!(b.to_string(), "ν̄ᴸ ⊗ eᴸ");
        assert_eq!(BilinearCombo::new().render(), "0");
        assert_eq!(FermionSym::E_R.bar().ascii(), "~eR");
    }
}
