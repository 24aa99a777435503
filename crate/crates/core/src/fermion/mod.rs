//! Symbolic lepton bilinears and the doublet currents built from them.

mod currents;
mod doublet;
mod symbols;

pub use currents::{
    coupling_free, current_split, current_trace, e_e, e_nu, er_er, inv_c0_sq, kappas, nu_e, nu_nu, stated_currents,
    stated_norm_current, yukawa_combo, yukawa_target, CurrentSplit, Kappa, Order, Part, StatedCurrent, KAPPA_STATED,
};
pub use doublet::{build_doublet, doublet_prefactor, l_rows, lbar_rows, BlockRows, Doublet, SymbolicZorn};
pub use symbols::{Bilinear, BilinearCombo, Chirality, FermionLin, FermionSym, Particle};
