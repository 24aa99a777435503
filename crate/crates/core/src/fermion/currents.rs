//! Gauge currents `tr(L̄ * Σᵃ * L)` and their association-order split.

use alloc::vec::Vec;

use crate::algebra::Entry;
use crate::octonion::{OctonionError, Zorn};
use crate::scalar::{CoeffElem, Rational, Surd};

use super::doublet::Doublet;
use super::symbols::{Bilinear, BilinearCombo, FermionLin, FermionSym};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    /// `(L̄ * Σᵃ) * L`
    Left,
    /// `L̄ * (Σᵃ * L)`
    Right,
}

pub fn current_trace(d: &Doublet, a: usize, order: Order) -> Result<BilinearCombo, OctonionError> {
    let s = Zorn::<CoeffElem>::sigma(a)?;
    let z: Zorn<BilinearCombo> = match order {
        Order::Left => d.lbar.star::<CoeffElem, FermionLin>(&s).star(&d.l),
        Order::Right => d.lbar.star(&s.star::<FermionLin, FermionLin>(&d.l)),
    };
    Ok(z.trace())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurrentSplit {
    pub a: usize,
    pub left: BilinearCombo,
    pub right: BilinearCombo,
    /// `½(left + right)`
    pub assoc: BilinearCombo,
    /// `½(left − right)`
    pub nonassoc: BilinearCombo,
    /// `tr{L̄, Σᵃ, L}`, equal to `left − right`.
    pub associator_trace: BilinearCombo,
}

pub fn current_split(d: &Doublet, a: usize) -> Result<CurrentSplit, OctonionError> {
    let left = current_trace(d, a, Order::Left)?;
    let right = current_trace(d, a, Order::Right)?;
    let s = Zorn::<CoeffElem>::sigma(a)?;
    let lbar_s: Zorn<FermionLin> = d.lbar.star(&s);
    let s_l: Zorn<FermionLin> = s.star(&d.l);
    let assoc_l: Zorn<BilinearCombo> = lbar_s.star(&d.l);
    let assoc_r: Zorn<BilinearCombo> = d.lbar.star(&s_l);
    let associator_trace = assoc_l.minus(&assoc_r).trace();
    Ok(CurrentSplit {
        a,
        assoc: left.plus(&right).halved(),
        nonassoc: left.minus(&right).halved(),
        left,
        right,
        associator_trace,
    })
}

/// `1/c₀² = 257/32`.
pub fn inv_c0_sq() -> Rational {
    Rational::frac(257, 32)
}

/// A current trace divided by `c₀²`, the form multiplying `gₐ` in the Lagrangian.
pub fn coupling_free(t: &BilinearCombo) -> BilinearCombo {
    t.map_coeffs(|c| c.scale_rational(&inv_c0_sq()))
}

pub fn nu_nu() -> Bilinear {
    Bilinear::new(FermionSym::NU_L, FermionSym::NU_L)
}

pub fn nu_e() -> Bilinear {
    Bilinear::new(FermionSym::NU_L, FermionSym::E_L)
}

pub fn e_nu() -> Bilinear {
    Bilinear::new(FermionSym::E_L, FermionSym::NU_L)
}

pub fn e_e() -> Bilinear {
    Bilinear::new(FermionSym::E_L, FermionSym::E_L)
}

pub fn er_er() -> Bilinear {
    Bilinear::new(FermionSym::E_R, FermionSym::E_R)
}

/// Normalization constants of the `A⁴` current `g₄(κ₁ ν̄ν − κ₂ ēe)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kappa {
    pub kappa1: CoeffElem,
    pub kappa2: CoeffElem,
}

/// Read κ₁, κ₂ off the full `a = 4` trace.
pub fn kappas(d: &Doublet) -> Result<Kappa, OctonionError> {
    let t = coupling_free(&current_split(d, 4)?.assoc);
    Ok(Kappa { kappa1: t.coeff(&nu_nu()), kappa2: -t.coeff(&e_e()) })
}

/// Which part of a current a stated coefficient list refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Part {
    Full,
    Assoc,
    Nonassoc,
}

/// A stated coupling-free current coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct StatedCurrent {
    pub a: usize,
    pub part: Part,
    pub value: BilinearCombo,
}

fn combo(terms: &[(Bilinear, CoeffElem)]) -> BilinearCombo {
    let mut c = BilinearCombo::new();
    for (b, k) in terms {
        c.add_term(*b, k.clone());
    }
    c
}

/// Stated values for the `a = 1..7` currents, per unit coupling.
pub fn stated_currents() -> Vec<StatedCurrent> {
    let i = CoeffElem::i;
    let r = CoeffElem::frac;
    let st = |a, part, terms: &[(Bilinear, CoeffElem)]| StatedCurrent { a, part, value: combo(terms) };
    alloc::vec![
        st(1, Part::Full, &[(nu_e(), r(1, 1)), (e_nu(), r(1, 1))]),
        st(2, Part::Full, &[(nu_e(), -i()), (e_nu(), i())]),
        st(3, Part::Full, &[(nu_nu(), r(1, 1)), (e_e(), r(-1, 1))]),
        st(5, Part::Nonassoc, &[(nu_e(), i().scale_rational(&Rational::frac(5, 4))), (e_nu(), i().scale_rational(&Rational::frac(-5, 4)))]),
        st(5, Part::Assoc, &[]),
        st(6, Part::Nonassoc, &[(e_e(), r(3, 2)), (nu_e(), r(5, 4)), (e_nu(), r(5, 4))]),
        st(6, Part::Assoc, &[]),
        st(7, Part::Full, &[]),
        st(7, Part::Assoc, &[]),
        st(7, Part::Nonassoc, &[]),
    ]
}

/// Stated approximate values of κ₁ and κ₂.
pub const KAPPA_STATED: (i64, i64) = (8, 7);

/// `tr L̄*L` after the reduction of `c₀²` and `y₀²`.
pub fn stated_norm_current() -> BilinearCombo {
    combo(&[(nu_nu(), CoeffElem::one()), (e_e(), CoeffElem::one())])
}

/// Yukawa sum `h̃ (tr(L̄*Ψ₀)·R + R̄·tr(Ψ̄₀*L))` in units of `m/√f`, with
/// `Ψ₀ = (m/√(2f))·vacuum` and `vacuum` the unit-free vacuum direction.
pub fn yukawa_combo(d: &Doublet, vacuum: &Zorn<CoeffElem>, h_tilde: &CoeffElem) -> BilinearCombo {
    let vbar = vacuum.conj::<CoeffElem>();
    let left: FermionLin = d.lbar.star::<CoeffElem, FermionLin>(vacuum).trace();
    let right: FermionLin = vbar.star::<FermionLin, FermionLin>(&d.l).trace();
    let r = FermionLin::sym(d.r);
    let rbar = FermionLin::sym(d.r.bar());
    let sum = crate::algebra::Product::product(&left, &r).plus(&crate::algebra::Product::product(&rbar, &right));
    // m/√(2f) = (m/√f)·s₂/2
    let unit = CoeffElem::surd(Surd::S2).halved();
    sum.scale(&(h_tilde * &unit))
}

/// `√2·h·(ēᴸeᴿ + ēᴿeᴸ)` in units of `m/√f`.
pub fn yukawa_target(h: &CoeffElem) -> BilinearCombo {
    let k = h * &CoeffElem::surd(Surd::S2);
    combo(&[
        (Bilinear::new(FermionSym::E_L, FermionSym::E_R), k.clone()),
        (Bilinear::new(FermionSym::E_R, FermionSym::E_L), k),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::build_doublet;

    #[test]
    fn sigma1_current() {
        let d = build_doublet();
        let t = current_trace(&d, 1, Order::Left).unwrap();
        assert_eq!(coupling_free(&t), stated_currents()[0].value);
    }

    #[test]
    fn norm_current_reduces() {
        let d = build_doublet();
        assert_eq!(current_trace(&d, 0, Order::Right).unwrap(), stated_norm_current());
    }

    #[test]
    fn split_identities() {
        let d = build_doublet();
        for a in 0..8 {
            let s = current_split(&d, a).unwrap();
            assert_eq!(s.assoc.plus(&s.nonassoc), s.left);
            assert_eq!(s.associator_trace, s.left.minus(&s.right));
        }
    }

    #[test]
    fn seventh_current_vanishes() {
        let d = build_doublet();
        assert!(current_trace(&d, 7, Order::Left).unwrap().is_empty());
    }

    #[test]
    fn kappa_exact() {
        let k = kappas(&build_doublet()).unwrap();
        assert_eq!(k.kappa1, CoeffElem::frac(-255, 32));
        assert_eq!(k.kappa2, CoeffElem::frac(875, 128));
    }
}
