//! Brute-force evaluation of `tr(L̄ * Σᵃ * L)` in a ten-element basis:
//! `Σ⁰..Σ⁷` plus `Ω_A = (0, I; 0, 0)` and `Ω_B = (0, 0; I, 0)`, which span the
//! identity parts of the off-diagonal blocks. Products use only the structure
//! constants and the blockwise rules for `Ω`:
//!
//! ```text
//! Ω_A * u' = (½trB', ξ'I; 0, 0)      u * Ω_A = (0, λI; 0, ½trB)
//! Ω_B * u' = (0, 0; λ'I, ½trA')      u * Ω_B = (½trA, 0; ξI, 0)
//! ```

use octoweak_core::algebra::{Entry, Product};
use octoweak_core::fermion::{
    doublet_prefactor, l_rows, lbar_rows, BilinearCombo, FermionLin, FermionSym, Order,
};
use octoweak_core::octonion::EpsTable3;
use octoweak_core::scalar::{CoeffElem, GaussQ, Rational};

pub const OMEGA_A: usize = 8;
pub const OMEGA_B: usize = 9;

/// `(λ, ξ, trA, trB)` of each basis element.
pub fn shape(k: usize) -> [GaussQ; 4] {
    let z = GaussQ::zero;
    let n = |x| GaussQ::int(x, 0);
    match k {
        0 => [n(1), n(1), z(), z()],
        4 => [n(-1), n(1), z(), z()],
        OMEGA_A => [z(), z(), n(2), z()],
        OMEGA_B => [z(), z(), z(), n(2)],
        _ => [z(), z(), z(), z()],
    }
}

/// Scalar part `(λ, ξ)` as `Σ⁰`, `Σ⁴` coordinates.
pub fn scalar_part(lambda: &GaussQ, xi: &GaussQ) -> Vec<(usize, GaussQ)> {
    let h = Rational::frac(1, 2);
    vec![(0, (lambda + xi).scale(&h)), (4, (xi - lambda).scale(&h))]
}

pub fn basis_product(eps: &EpsTable3, i: usize, j: usize) -> Vec<(usize, GaussQ)> {
    let h = Rational::frac(1, 2);
    let [li, xi, tai, tbi] = shape(i);
    let [lj, xj, taj, tbj] = shape(j);
    let mut out = match (i, j) {
        (OMEGA_A, _) => {
            let mut v = scalar_part(&tbj.scale(&h), &GaussQ::zero());
            v.push((OMEGA_A, xj));
            v
        }
        (OMEGA_B, _) => {
            let mut v = scalar_part(&GaussQ::zero(), &taj.scale(&h));
            v.push((OMEGA_B, lj));
            v
        }
        (_, OMEGA_A) => {
            let mut v = scalar_part(&GaussQ::zero(), &tbi.scale(&h));
            v.push((OMEGA_A, li));
            v
        }
        (_, OMEGA_B) => {
            let mut v = scalar_part(&tai.scale(&h), &GaussQ::zero());
            v.push((OMEGA_B, xi));
            v
        }
        (0, _) => vec![(j, GaussQ::one())],
        (_, 0) => vec![(i, GaussQ::one())],
        _ if i == j => vec![(0, GaussQ::one())],
        _ => (1..8)
            .filter_map(|k| match eps.get([i, j, k]) {
                0 => None,
                s => Some((k, GaussQ::int(0, i64::from(s)))),
            })
            .collect(),
    };
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub type Elem<T> = [T; 10];

pub fn mul<T, R, O>(eps: &EpsTable3, x: &Elem<T>, y: &Elem<R>) -> Elem<O>
where
    T: Entry + Product<R, Output = O>,
    R: Entry,
    O: Entry + Product<CoeffElem, Output = O>,
{
    let mut out: Elem<O> = std::array::from_fn(|_| O::zero());
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a.product(b);
            for (k, c) in basis_product(eps, i, j) {
                out[k] = out[k].plus(&ab.product(&CoeffElem::from(c)));
            }
        }
    }
    out
}

pub fn trace<T: Entry + Product<CoeffElem, Output = T>>(x: &Elem<T>) -> T {
    x[0].product(&CoeffElem::int(4))
}

pub fn sigma(a: usize) -> Elem<CoeffElem> {
    std::array::from_fn(|k| if k == a { CoeffElem::one() } else { CoeffElem::zero() })
}

/// Blocks `A = Σ aₖσᵏ`, `B = Σ bₖσᵏ` (k = 0 for I) in basis coordinates.
pub fn from_blocks(a: &[FermionLin; 4], b: &[FermionLin; 4]) -> Elem<FermionLin> {
    let mut out: Elem<FermionLin> = std::array::from_fn(|_| FermionLin::zero());
    let half = CoeffElem::frac(1, 2);
    for k in 1..4 {
        // xΣᵏ + yΣ⁴⁺ᵏ has A = (−ix − y)σᵏ, B = (ix − y)σᵏ.
        out[k] = a[k].minus(&b[k]).times_i().scale(&half);
        out[4 + k] = a[k].plus(&b[k]).negated().scale(&half);
    }
    out[OMEGA_A] = a[0].clone();
    out[OMEGA_B] = b[0].clone();
    out
}

pub fn rows_to_block(rows: &[([CoeffElem; 4], FermionSym); 2]) -> [FermionLin; 4] {
    let k = doublet_prefactor();
    std::array::from_fn(|c| {
        rows.iter().fold(FermionLin::zero(), |acc, (row, s)| acc.plus(&FermionLin::of(*s, &row[c] * &k)))
    })
}

pub fn oracle_doublet() -> (Elem<FermionLin>, Elem<FermionLin>) {
    let (lt, lb) = l_rows();
    let (bt, bb) = lbar_rows();
    (from_blocks(&rows_to_block(&lt), &rows_to_block(&lb)), from_blocks(&rows_to_block(&bt), &rows_to_block(&bb)))
}

pub fn oracle_trace(a: usize, order: Order) -> BilinearCombo {
    let eps = EpsTable3::structure_constants();
    let (l, lbar) = oracle_doublet();
    let s = sigma(a);
    let r: Elem<BilinearCombo> = match order {
        Order::Left => mul(&eps, &mul::<_, _, FermionLin>(&eps, &lbar, &s), &l),
        Order::Right => mul(&eps, &lbar, &mul::<_, _, FermionLin>(&eps, &s, &l)),
    };
    trace(&r)
}

pub fn from_zorn_block(x: &Elem<FermionLin>, top: bool) -> octoweak_core::octonion::Mat2<FermionLin> {
    use octoweak_core::octonion::Mat2;
    let pauli = |k: usize| Mat2::<CoeffElem>::pauli(k);
    let mut m = Mat2::<FermionLin>::zero();
    for k in 1..4 {
        // A part of Σᵏ is −iσᵏ, of Σ⁴⁺ᵏ is −σᵏ; B parts iσᵏ and −σᵏ.
        let (ck, c4k) = if top {
            (x[k].times_i().negated(), x[4 + k].negated())
        } else {
            (x[k].times_i(), x[4 + k].negated())
        };
        let coeff = ck.plus(&c4k);
        m = m.plus(&pauli(k).map(|p| coeff.scale(p)));
    }
    let id = if top { &x[OMEGA_A] } else { &x[OMEGA_B] };
    m.plus(&Mat2::<CoeffElem>::identity().map(|p| id.scale(p)))
}

