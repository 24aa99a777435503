//! Engine output against frozen values.

#[path = "common/golden_values.rs"]
#[allow(dead_code)]
mod golden_values;

use octoweak_core::couplings::{coupling_match, ChargeSet, Couplings};
use octoweak_core::fermion::{build_doublet, current_split, kappas};
use octoweak_core::field::{mass_matrix, mass_tensor, FieldParams, MassOrder};
use octoweak_core::scalar::{CoeffElem, Rational};
use golden_values::*;

#[test]
fn current_traces_frozen() {
    let d = build_doublet();
    for a in 0..8 {
        let s = current_split(&d, a).unwrap();
        assert_eq!(s.left, golden_current(a), "a = {a}");
        assert_eq!(s.right, golden_current(a), "a = {a}");
        assert!(s.nonassoc.is_empty(), "a = {a}");
    }
}

#[test]
fn kappa_frozen() {
    let k = kappas(&build_doublet()).unwrap();
    assert_eq!(k.kappa1, CoeffElem::frac(-255, 32));
    assert_eq!(k.kappa2, CoeffElem::frac(875, 128));
}

#[test]
fn mass_tensor_frozen() {
    for order in MassOrder::ALL {
        assert_eq!(mass_tensor(order), golden_tensor(), "{order:?}");
    }
}

#[test]
fn unit_charge_mass_matrix_frozen() {
    let cs = ChargeSet::from_charges(std::array::from_fn(|_| Rational::one()), CoeffElem::zero());
    let m = mass_matrix(&cs, &FieldParams::default());
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(m.m[a][b], golden_unit_mass(a, b), "({a}, {b})");
        }
    }
}

#[test]
fn matched_charges_mass_diagonal() {
    let cs = coupling_match(&Couplings::default());
    let m = mass_matrix(&cs, &FieldParams::default());
    let k = Rational::frac(257 * 257, 32 * 32 * 2);
    for a in 0..8 {
        assert_eq!(m.m[a][a], k);
    }
    assert_eq!(m.m[0][3], k);
}
