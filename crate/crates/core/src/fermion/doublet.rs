use crate::algebra::Entry;
use crate::octonion::{Mat2, Zorn};
use crate::scalar::{CoeffElem, GaussQ, Rational, Surd};

use super::symbols::{FermionLin, FermionSym};

/// Zorn matrix whose entries are degree-one combinations of fermion symbols.
pub type SymbolicZorn = Zorn<FermionLin>;

/// The lepton doublet matrices and the right-handed singlet.
#[derive(Clone, Debug, PartialEq)]
pub struct Doublet {
    pub l: SymbolicZorn,
    pub lbar: SymbolicZorn,
    pub r: FermionSym,
}

/// Coefficients `[I, σ¹, σ², σ³]` of one block term.
type PauliRow = [CoeffElem; 4];

fn q(n: i64, d: i64) -> CoeffElem {
    CoeffElem::frac(n, d)
}

fn qi(n: i64, d: i64) -> CoeffElem {
    CoeffElem::from(GaussQ::new(Rational::zero(), Rational::frac(n, d)))
}

fn block(terms: &[(PauliRow, FermionSym)], overall: &CoeffElem) -> Mat2<FermionLin> {
    let mut out = Mat2::<FermionLin>::zero();
    for (row, sym) in terms {
        let m = Mat2::<CoeffElem>::from_pauli_coords(row).scale(overall);
        let lin = FermionLin::sym(*sym);
        out = out.plus(&m.map(|c| lin.scale(c)));
    }
    out
}

/// `c₀/√2 = c₀·s₂/2`.
pub fn doublet_prefactor() -> CoeffElem {
    (&CoeffElem::surd(Surd::C0) * &CoeffElem::surd(Surd::S2)).halved()
}

fn y0() -> CoeffElem {
    CoeffElem::surd(Surd::Y0)
}

/// Rows of the upper and lower off-diagonal blocks.
pub type BlockRows = ([(PauliRow, FermionSym); 2], [(PauliRow, FermionSym); 2]);

/// Top-right and bottom-left blocks of `L` before the prefactor.
pub fn l_rows() -> BlockRows {
    let z = CoeffElem::zero;
    let top = [
        ([z(), qi(2, 1), q(-2, 1), z()], FermionSym::NU_L),
        ([y0(), qi(2, 3), q(2, 3), qi(1, 1)], FermionSym::E_L),
    ];
    let bottom = [
        ([z(), qi(-1, 8), q(1, 8), z()], FermionSym::NU_L),
        ([z(), qi(-3, 8), q(-3, 8), qi(9, 16)], FermionSym::E_L),
    ];
    (top, bottom)
}

/// Top-right and bottom-left blocks of `L̄` as written out explicitly.
pub fn lbar_rows() -> BlockRows {
    let z = CoeffElem::zero;
    let top = [
        ([z(), qi(1, 8), q(1, 8), z()], FermionSym::NU_L.bar()),
        ([z(), qi(3, 8), q(-3, 8), qi(-9, 16)], FermionSym::E_L.bar()),
    ];
    let bottom = [
        ([z(), qi(-2, 1), q(-2, 1), z()], FermionSym::NU_L.bar()),
        ([y0(), qi(-2, 3), q(2, 3), qi(-1, 1)], FermionSym::E_L.bar()),
    ];
    (top, bottom)
}

fn assemble(rows: BlockRows) -> SymbolicZorn {
    let k = doublet_prefactor();
    Zorn::new(FermionLin::new(), block(&rows.0, &k), block(&rows.1, &k), FermionLin::new())
}

pub fn build_doublet() -> Doublet {
    Doublet { l: assemble(l_rows()), lbar: assemble(lbar_rows()), r: FermionSym::E_R }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_scalars_vanish() {
        let d = build_doublet();
        assert!(d.l.lambda.is_zero() && d.l.xi.is_zero());
        assert!(d.lbar.lambda.is_zero() && d.lbar.xi.is_zero());
    }

    #[test]
    fn explicit_bar_is_conjugate() {
        let d = build_doublet();
        assert_eq!(d.l.conj::<FermionLin>(), d.lbar);
    }

    #[test]
    fn neutrino_entry_top_right() {
        let d = build_doublet();
        let two_i_c0_s2 = &CoeffElem::i().scale_rational(&Rational::integer(2))
            * &(&CoeffElem::surd(Surd::C0) * &CoeffElem::surd(Surd::S2));
        assert_eq!(d.l.a.m[0][1].coeff(&FermionSym::NU_L), two_i_c0_s2);
        assert!(d.l.a.m[1][0].coeff(&FermionSym::NU_L).is_zero());
    }
}
