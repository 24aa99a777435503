//! Values frozen from an independent symbolic expansion.

use octoweak_core::fermion::{e_e, e_nu, nu_e, nu_nu, Bilinear, BilinearCombo};
use octoweak_core::scalar::{CoeffElem, GaussQ, Rational};

pub fn combo(terms: &[(Bilinear, CoeffElem)]) -> BilinearCombo {
    let mut c = BilinearCombo::new();
    for (b, k) in terms {
        c.add_term(*b, k.clone());
    }
    c
}

pub fn c0sq(k: CoeffElem) -> CoeffElem {
    &k * &CoeffElem::frac(32, 257)
}

pub fn golden_current(a: usize) -> BilinearCombo {
    let r = CoeffElem::frac;
    let i = |n, d| CoeffElem::from(GaussQ::new(Rational::zero(), Rational::frac(n, d)));
    match a {
        0 => combo(&[(nu_nu(), r(1, 1)), (e_e(), r(1, 1))]),
        1 => combo(&[(nu_e(), c0sq(r(1, 1))), (e_nu(), c0sq(r(1, 1)))]),
        2 => combo(&[(nu_e(), c0sq(i(-1, 1))), (e_nu(), c0sq(i(1, 1)))]),
        3 => combo(&[(nu_nu(), c0sq(r(1, 1))), (e_e(), c0sq(r(-1, 1)))]),
        4 => combo(&[(nu_nu(), c0sq(r(-255, 32))), (e_e(), c0sq(r(-875, 128)))]),
        5 => combo(&[(nu_e(), c0sq(i(5, 4))), (e_nu(), c0sq(i(-5, 4)))]),
        6 => combo(&[(nu_e(), c0sq(r(5, 4))), (e_nu(), c0sq(r(5, 4))), (e_e(), c0sq(r(3, 2)))]),
        _ => BilinearCombo::new(),
    }
}

/// `T(a,b) = tr(v̄Σᵃ * Σᵇv)` for `v = (0, iσ³; 0, I)`.
pub fn golden_tensor() -> [[GaussQ; 8]; 8] {
    let mut t: [[GaussQ; 8]; 8] = std::array::from_fn(|_| std::array::from_fn(|_| GaussQ::zero()));
    for (a, row) in t.iter_mut().enumerate() {
        row[a] = GaussQ::int(4, 0);
    }
    t[0][3] = GaussQ::int(-4, 0);
    t[3][0] = GaussQ::int(-4, 0);
    for (a, b) in [(1, 5), (2, 6), (4, 7)] {
        t[a][b] = GaussQ::int(0, -4);
        t[b][a] = GaussQ::int(0, 4);
    }
    t
}

/// Unit-charge mass matrix at `m = f = 1`.
pub fn golden_unit_mass(a: usize, b: usize) -> Rational {
    match (a, b) {
        _ if a == b => Rational::frac(1, 2),
        (0, 3) | (3, 0) => Rational::frac(-1, 2),
        _ => Rational::zero(),
    }
}
