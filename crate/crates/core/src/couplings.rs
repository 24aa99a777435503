//! Gauge charges and the coupling dictionary relating them to `g`, `g⁽¹⁾`, `gₖ`, `h`.

use alloc::vec::Vec;

use crate::fermion::inv_c0_sq;
use crate::octonion::{EpsTable4, OctonionError};
use crate::scalar::{CoeffElem, Rational, Surd};

/// Coupling constants entering the matched Lagrangian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Couplings {
    pub g: Rational,
    pub g1: Rational,
    pub h: Rational,
    /// `g₄..g₇` at indices `0..4`.
    pub gk: [Rational; 4],
}

impl Default for Couplings {
    fn default() -> Self {
        Couplings { g: Rational::one(), g1: Rational::one(), h: Rational::one(), gk: core::array::from_fn(|_| Rational::one()) }
    }
}

impl Couplings {
    pub fn zero() -> Self {
        Couplings { g: Rational::zero(), g1: Rational::zero(), h: Rational::zero(), gk: core::array::from_fn(|_| Rational::zero()) }
    }

    /// `gₖ` for `k ∈ 4..=7`.
    pub fn g_k(&self, k: usize) -> &Rational {
        &self.gk[k - 4]
    }

    /// `gₐ² = g₅² + g₆²`.
    pub fn g_a_sq(&self) -> Rational {
        &(self.g_k(5) * self.g_k(5)) + &(self.g_k(6) * self.g_k(6))
    }

    pub fn g_a(&self) -> f64 {
        libm::sqrt(self.g_a_sq().to_f64())
    }

    /// Mixing angle with `tan θ = g⁽¹⁾/g`.
    pub fn theta(&self) -> f64 {
        libm::atan2(self.g1.to_f64(), self.g.to_f64())
    }
}

/// Charges `qᵃ` and the Yukawa constant `h̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeSet {
    pub q: [Rational; 8],
    pub h_tilde: CoeffElem,
    pub couplings: Couplings,
}

impl ChargeSet {
    /// Raw charges with the couplings read back through `qc₀²`.
    pub fn from_charges(q: [Rational; 8], h_tilde: CoeffElem) -> Self {
        let c0_sq = Rational::frac(32, 257);
        let h = (&h_tilde * &CoeffElem::surd(Surd::C0) * CoeffElem::surd(Surd::S2)).scale_rational(&Rational::frac(1, 2));
        let couplings = Couplings {
            g: &q[1] * &c0_sq,
            g1: -(&q[0] * &c0_sq),
            h: h.as_rational().cloned().unwrap_or_default(),
            gk: core::array::from_fn(|k| &q[k + 4] * &c0_sq),
        };
        ChargeSet { q, h_tilde, couplings }
    }

    pub fn q_f64(&self) -> [f64; 8] {
        core::array::from_fn(|k| self.q[k].to_f64())
    }
}

/// `q⁰ = −g⁽¹⁾/c₀²`, `qᵏ = g/c₀²` (k = 1..3), `qᵏ = gₖ/c₀²` (k = 4..7), `h̃ = √2·h/c₀`.
pub fn coupling_match(c: &Couplings) -> ChargeSet {
    let k = inv_c0_sq();
    let q = core::array::from_fn(|a| match a {
        0 => -(&c.g1 * &k),
        1..=3 => &c.g * &k,
        _ => c.g_k(a) * &k,
    });
    // 1/c₀ = c₀/c₀²
    let h_tilde = (&CoeffElem::surd(Surd::S2) * &CoeffElem::surd(Surd::C0)).scale_rational(&(&c.h * &k));
    ChargeSet { q, h_tilde, couplings: c.clone() }
}

/// One term `qᵃqᵇqᶜqᵈ ε^{abcd}` of the quartic gauge contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticTerm {
    pub indices: [usize; 4],
    pub sign: i8,
    pub coefficient: Rational,
}

/// Index-contraction tag `η^{λδ}η^{μν}` attached to every quartic term.
pub const QUARTIC_LORENTZ: &str = "(λδ)(μν)";

pub fn quartic_contract(c: &ChargeSet) -> Result<Vec<QuarticTerm>, OctonionError> {
    Ok(quartic_with_table(c, &EpsTable4::from_associators()?))
}

pub fn quartic_with_table(c: &ChargeSet, eps: &EpsTable4) -> Vec<QuarticTerm> {
    eps.entries()
        .iter()
        .filter_map(|(idx, sign)| {
            let prod = idx.iter().fold(Rational::one(), |acc, &k| &acc * &c.q[k]);
            let coefficient = &prod * &Rational::integer(i64::from(*sign));
            (!coefficient.is_zero()).then_some(QuarticTerm { indices: *idx, sign: *sign, coefficient })
        })
        .collect()
}
