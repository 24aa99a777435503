#![allow(dead_code)]

use octoweak_core::octonion::{Mat2, Zorn};
use octoweak_core::scalar::{CoeffElem, GaussQ, Monomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seed() -> u64 {
    std::env::var("OCTOWEAK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

pub fn rational(r: &mut impl Rng) -> Rational {
    Rational::frac(r.gen_range(-9..=9), r.gen_range(1..=6))
}

pub fn gauss(r: &mut impl Rng) -> GaussQ {
    GaussQ::new(rational(r), rational(r))
}

pub fn coeff(r: &mut impl Rng) -> CoeffElem {
    Monomial::all().fold(CoeffElem::zero(), |acc, m| {
        if r.gen_bool(0.6) {
            &acc + &CoeffElem::monomial(m, gauss(r))
        } else {
            acc
        }
    })
}

fn traceless(r: &mut impl Rng) -> Mat2<GaussQ> {
    Mat2::from_pauli_coords(&[GaussQ::zero(), gauss(r), gauss(r), gauss(r)])
}

fn general(r: &mut impl Rng) -> Mat2<GaussQ> {
    Mat2::from_pauli_coords(&[gauss(r), gauss(r), gauss(r), gauss(r)])
}

/// Element of the octonion span: traceless off-diagonal blocks.
pub fn octonionic(r: &mut impl Rng) -> Zorn<GaussQ> {
    Zorn::new(gauss(r), traceless(r), traceless(r), gauss(r))
}

/// Element of the full abstract-matrix algebra.
pub fn zorn(r: &mut impl Rng) -> Zorn<GaussQ> {
    Zorn::new(gauss(r), general(r), general(r), gauss(r))
}
