//! Term-by-term assembly of the broken-phase Lagrangian.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::couplings::{quartic_with_table, ChargeSet, Couplings, QUARTIC_LORENTZ};
use crate::fermion::{
    build_doublet, current_trace, e_e, e_nu, er_er, nu_e, nu_nu, yukawa_combo, Bilinear, BilinearCombo, FermionSym,
    Order,
};
use crate::octonion::{EpsTable4, OctonionError, Zorn};
use crate::scalar::{CoeffElem, GaussQ, Rational, Surd};

use super::mass::{mass_matrix_unit, MassMatrix};
use super::vacuum::{potential_of_norm, vacuum_direction, vacuum_norm_sq};
use super::FieldParams;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TermClass {
    Kinetic,
    Mass,
    Current,
    Yukawa,
    Quartic,
    Constant,
}

impl TermClass {
    pub fn name(self) -> &'static str {
        match self {
            TermClass::Kinetic => "kinetic",
            TermClass::Mass => "mass",
            TermClass::Current => "current",
            TermClass::Yukawa => "yukawa",
            TermClass::Quartic => "quartic",
            TermClass::Constant => "constant",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sector {
    Associative,
    NonAssociative,
}

impl Sector {
    pub fn name(self) -> &'static str {
        match self {
            Sector::Associative => "associative",
            Sector::NonAssociative => "nonassociative",
        }
    }
}

/// Formal factor `m^m · f^(sqrt_f/2) · gₐ^g_a` kept outside the exact coefficient.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct FormalScale {
    pub m: i32,
    pub sqrt_f: i32,
    pub g_a: i32,
}

impl FormalScale {
    pub const ONE: FormalScale = FormalScale { m: 0, sqrt_f: 0, g_a: 0 };

    pub const fn new(m: i32, sqrt_f: i32, g_a: i32) -> Self {
        FormalScale { m, sqrt_f, g_a }
    }

    pub fn value(&self, m: f64, f: f64, g_a: f64) -> f64 {
        libm::pow(m, f64::from(self.m)) * libm::pow(f, f64::from(self.sqrt_f) / 2.0) * libm::pow(g_a, f64::from(self.g_a))
    }

    /// e.g. `g_a^2·m^2/f`, `m/√f`, or `1`.
    pub fn render(&self) -> String {
        let pow = |base: &str, e: i32| match e {
            1 => base.to_string(),
            _ => format!("{base}^{e}"),
        };
        let mut num = Vec::new();
        let mut den = Vec::new();
        if self.g_a != 0 {
            (if self.g_a > 0 { &mut num } else { &mut den }).push(pow("g_a", self.g_a.abs()));
        }
        if self.m != 0 {
            (if self.m > 0 { &mut num } else { &mut den }).push(pow("m", self.m.abs()));
        }
        if self.sqrt_f != 0 {
            let e = self.sqrt_f.abs();
            let f = if e % 2 == 0 { pow("f", e / 2) } else { pow("√f", e) };
            (if self.sqrt_f > 0 { &mut num } else { &mut den }).push(f);
        }
        let n = if num.is_empty() { "1".to_string() } else { num.join("·") };
        if den.is_empty() {
            n
        } else {
            format!("{n}/{}", den.join("·"))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LagrangianTerm {
    pub class: TermClass,
    pub sector: Sector,
    /// Formal field labels; derivative and field-strength tags included.
    pub fields: Vec<String>,
    /// Formal Lorentz index pattern.
    pub lorentz: String,
    pub bilinear: Option<Bilinear>,
    /// Exact coefficient, to be multiplied by `scale`.
    pub coefficient: CoeffElem,
    pub scale: FormalScale,
    /// Stated coefficient in the same units, when one is written down.
    pub claimed: Option<CoeffElem>,
    /// The stated value is only given approximately.
    pub approximate: bool,
}

impl LagrangianTerm {
    /// Unique key such as `current:A3:~eL.eL`.
    pub fn key(&self) -> String {
        let mut k = format!("{}:{}", self.class.name(), self.fields.join("."));
        if let Some(b) = &self.bilinear {
            k.push(':');
            k.push_str(&b.bar.bar().ascii());
            k.push('.');
            k.push_str(&b.ket.ascii());
        }
        k
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct TermTable {
    pub terms: Vec<LagrangianTerm>,
}

impl TermTable {
    pub fn sector(&self, s: Sector) -> impl Iterator<Item = &LagrangianTerm> {
        self.terms.iter().filter(move |t| t.sector == s)
    }

    pub fn find(&self, key: &str) -> Option<&LagrangianTerm> {
        self.terms.iter().find(|t| t.key() == key)
    }

    /// Keys appearing more than once.
    pub fn duplicate_keys(&self) -> Vec<String> {
        let mut keys: Vec<String> = self.terms.iter().map(LagrangianTerm::key).collect();
        keys.sort();
        let mut dup: Vec<String> = keys.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0].clone()).collect();
        dup.dedup();
        dup
    }

    fn canonicalize(&mut self) {
        self.terms.sort_by(|a, b| {
            (a.class, &a.fields, a.bilinear).cmp(&(b.class, &b.fields, b.bilinear))
        });
    }
}

/// Quadratic form in `D`, `D̄` obtained from the `A⁵`, `A⁶` block, in units of `gₐ²·m²/f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMass {
    pub d_dbar: GaussQ,
    pub d_d: GaussQ,
    pub dbar_dbar: GaussQ,
}

/// Substitutes `A⁵ = gₐ(D − D̄)/(2ig₅)`, `A⁶ = gₐ(D + D̄)/(2g₆)`.
/// `None` when `gₐ = 0`.
pub fn d_basis_mass(unit: &MassMatrix, c: &Couplings) -> Option<DMass> {
    let (g5, g6) = (c.g_k(5), c.g_k(6));
    if g5.is_zero() && g6.is_zero() {
        return None;
    }
    let m = |a: usize, b: usize| GaussQ::real(unit.m[a][b].clone());
    // a5 = −i/(2g₅), a6 = 1/(2g₆); a zero coupling forces the matching row of M to vanish.
    let a5 = if g5.is_zero() { GaussQ::zero() } else { GaussQ::new(Rational::zero(), -(&Rational::one() / &(g5 * &Rational::integer(2)))) };
    let a6 = if g6.is_zero() { GaussQ::zero() } else { GaussQ::real(&Rational::one() / &(g6 * &Rational::integer(2))) };
    let a55 = &(&a5 * &a5) * &m(5, 5);
    let a66 = &(&a6 * &a6) * &m(6, 6);
    let a56 = &(&(&a5 * &a6) * &m(5, 6)) * &GaussQ::int(2, 0);
    let two = GaussQ::int(2, 0);
    Some(DMass {
        d_dbar: &(&a66 - &a55) * &two,
        d_d: &(&a55 + &a56) + &a66,
        dbar_dbar: &(&a55 - &a56) + &a66,
    })
}

fn label(a: usize) -> String {
    match a {
        0 => "B".into(),
        4 => "C".into(),
        7 => "E".into(),
        _ => format!("A{a}"),
    }
}

fn rat(x: Rational) -> CoeffElem {
    CoeffElem::from(x)
}

fn half(x: &Rational) -> CoeffElem {
    rat(x * &Rational::frac(1, 2))
}

struct Builder {
    terms: Vec<LagrangianTerm>,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        class: TermClass,
        sector: Sector,
        fields: &[&str],
        lorentz: &str,
        bilinear: Option<Bilinear>,
        coefficient: CoeffElem,
        scale: FormalScale,
        claimed: Option<CoeffElem>,
        approximate: bool,
    ) {
        let stated_zero = claimed.as_ref().is_none_or(CoeffElem::is_zero);
        if coefficient.is_zero() && stated_zero {
            return;
        }
        self.terms.push(LagrangianTerm {
            class,
            sector,
            fields: fields.iter().map(|s| s.to_string()).collect(),
            lorentz: lorentz.into(),
            bilinear,
            coefficient,
            scale,
            claimed,
            approximate,
        });
    }
}

/// Stated current coefficients of the `A⁰..A⁴` fields, keyed by bilinear.
fn stated_current(a: usize, c: &Couplings) -> Vec<(Bilinear, CoeffElem, bool)> {
    let g = &c.g;
    let g1 = &c.g1;
    let i = CoeffElem::i();
    match a {
        0 => vec![(nu_nu(), half(g1), false), (e_e(), half(g1), false)],
        1 => vec![(nu_e(), -half(g), false), (e_nu(), -half(g), false)],
        2 => vec![(nu_e(), &i * &half(g), false), (e_nu(), -(&i * &half(g)), false)],
        3 => vec![(e_e(), half(g), false), (nu_nu(), -half(g), false)],
        4 => {
            let g4 = c.g_k(4);
            vec![(nu_nu(), rat(-(g4 * &Rational::integer(8))), true), (e_e(), rat(g4 * &Rational::integer(7)), true)]
        }
        _ => Vec::new(),
    }
}

/// Every term of the broken-phase Lagrangian with exact coefficients.
/// Currents of `A⁵`, `A⁶` appear rewritten in the `D`, `D̄` basis.
pub fn lagrangian_terms(c: &ChargeSet, p: &FieldParams) -> Result<TermTable, OctonionError> {
    let d = build_doublet();
    let cp = &c.couplings;
    let mut b = Builder { terms: Vec::new() };
    let assoc = Sector::Associative;
    let nas = Sector::NonAssociative;

    // Gauge kinetic term `−(1/16) tr(Σᵃ*Σᵃ) FᵃFᵃ`, identical for every a.
    let str_ = Zorn::<CoeffElem>::sigma(1)?;
    let tr11 = str_.star::<CoeffElem, CoeffElem>(&str_).trace();
    let kin = (&tr11 * &CoeffElem::frac(-1, 16)).clone();
    b.push(TermClass::Kinetic, assoc, &["F(a)", "F(a)"], "(μν)(μν)", None, kin, FormalScale::ONE, Some(CoeffElem::frac(-1, 4)), false);

    // Fermion kinetic terms from `tr L̄*L` and the singlet.
    let norm = current_trace(&d, 0, Order::Left)?;
    let i_half = CoeffElem::i().scale_rational(&Rational::frac(1, 2));
    for bl in [nu_nu(), e_e()] {
        b.push(TermClass::Kinetic, assoc, &["∂"], "μ", Some(bl), &i_half * &norm.coeff(&bl), FormalScale::ONE, Some(i_half.clone()), false);
    }
    b.push(TermClass::Kinetic, assoc, &["∂"], "μ", Some(er_er()), i_half.clone(), FormalScale::ONE, Some(i_half.clone()), false);

    // Gauge-boson masses, units m²/f.
    let unit = mass_matrix_unit(c);
    let m2f = FormalScale::new(2, -2, 0);
    let g_sq = &cp.g * &cp.g;
    for a in 0..8 {
        for a2 in a..8 {
            if (5..=6).contains(&a) && (5..=6).contains(&a2) {
                continue;
            }
            let k = if a == a2 { unit.m[a][a].clone() } else { &unit.m[a][a2] * &Rational::integer(2) };
            let claimed = match (a, a2) {
                (1, 1) | (2, 2) | (3, 3) => Some(half(&g_sq)),
                (0, 3) => Some(rat(-(&cp.g * &cp.g1))),
                (4, 4) => Some(half(&(cp.g_k(4) * cp.g_k(4)))),
                (7, 7) => Some(half(&(cp.g_k(7) * cp.g_k(7)))),
                _ => None,
            };
            let (la, lb) = (label(a), label(a2));
            b.push(TermClass::Mass, assoc, &[&la, &lb], "μ,μ", None, rat(k), m2f, claimed, false);
        }
    }
    if let Some(dm) = d_basis_mass(&unit, cp) {
        let ga_m2f = FormalScale::new(2, -2, 2);
        b.push(TermClass::Mass, assoc, &["Dbar", "D"], "μ,μ", None, dm.d_dbar.into(), ga_m2f, Some(CoeffElem::one()), false);
        b.push(TermClass::Mass, assoc, &["D", "D"], "μ,μ", None, dm.d_d.into(), ga_m2f, None, false);
        b.push(TermClass::Mass, assoc, &["Dbar", "Dbar"], "μ,μ", None, dm.dbar_dbar.into(), ga_m2f, None, false);
    }

    // Currents `−qᵃ tr(L̄*Σᵃ*L)` for a = 0..4.
    let traces: Vec<BilinearCombo> = (0..8).map(|a| current_trace(&d, a, Order::Left)).collect::<Result<_, _>>()?;
    for (a, t) in traces.iter().enumerate().take(5) {
        let q = rat(c.q[a].clone());
        let stated = stated_current(a, cp);
        let mut bls: Vec<Bilinear> = t.terms().map(|(bl, _)| *bl).collect();
        bls.extend(stated.iter().map(|(bl, _, _)| *bl));
        bls.sort();
        bls.dedup();
        let la = label(a);
        for bl in bls {
            let claim = stated.iter().find(|(x, _, _)| *x == bl);
            b.push(
                TermClass::Current,
                assoc,
                &[&la],
                "μ",
                Some(bl),
                -(&q * &t.coeff(&bl)),
                FormalScale::ONE,
                claim.map(|(_, v, _)| v.clone()),
                claim.is_some_and(|(_, _, approx)| *approx),
            );
        }
    }
    b.push(TermClass::Current, assoc, &["B"], "μ", Some(er_er()), -rat(c.q[0].clone()), FormalScale::ONE, Some(rat(cp.g1.clone())), false);

    // `A⁵`, `A⁶` currents in the `D`, `D̄` basis, units gₐ:
    // −gₐ[(t₆ − it₅)/2 · D + (t₆ + it₅)/2 · D̄] with t = trace/c₀².
    let t5 = crate::fermion::coupling_free(&traces[5]);
    let t6 = crate::fermion::coupling_free(&traces[6]);
    let i = CoeffElem::i();
    let stated_d = [
        ("D", nu_e(), CoeffElem::frac(-5, 4)),
        ("Dbar", e_nu(), CoeffElem::frac(-5, 4)),
        ("D", e_e(), CoeffElem::frac(-3, 4)),
        ("Dbar", e_e(), CoeffElem::frac(-3, 4)),
    ];
    let mut bls: Vec<Bilinear> = t5.terms().chain(t6.terms()).map(|(bl, _)| *bl).collect();
    bls.extend(stated_d.iter().map(|(_, bl, _)| *bl));
    bls.sort();
    bls.dedup();
    let ga = FormalScale::new(0, 0, 1);
    let d_present = !cp.g_a_sq().is_zero();
    for bl in bls.into_iter().filter(|_| d_present) {
        let (x5, x6) = (t5.coeff(&bl), t6.coeff(&bl));
        let alpha = (&x6 - &(&i * &x5)).scale_rational(&Rational::frac(1, 2));
        let beta = (&x6 + &(&i * &x5)).scale_rational(&Rational::frac(1, 2));
        for (name, coef) in [("D", alpha), ("Dbar", beta)] {
            let claim = stated_d.iter().find(|(n, x, _)| *n == name && *x == bl).map(|(_, _, v)| v.clone());
            b.push(TermClass::Current, nas, &[name], "μ", Some(bl), -coef, ga, claim, false);
        }
    }

    // Yukawa `−h̃(L̄*Ψ₀R + R̄Ψ̄₀*L)`, units m/√f.
    let yuk = yukawa_combo(&d, &vacuum_direction::<CoeffElem>(), &c.h_tilde);
    let stated_y = &rat(cp.h.clone()) * &CoeffElem::surd(Surd::S2);
    for bl in [Bilinear::new(FermionSym::E_L, FermionSym::E_R), Bilinear::new(FermionSym::E_R, FermionSym::E_L)] {
        b.push(TermClass::Yukawa, assoc, &[], "", Some(bl), -yuk.coeff(&bl), FormalScale::new(1, -1, 0), Some(stated_y.clone()), false);
    }

    // Quartic gauge contraction, computed against stated ε signs.
    let computed = quartic_with_table(c, &EpsTable4::from_associators()?);
    let listed = quartic_with_table(c, &EpsTable4::listed());
    let mut quads: Vec<[usize; 4]> = computed.iter().chain(listed.iter()).map(|t| t.indices).collect();
    quads.sort();
    quads.dedup();
    for idx in quads {
        let find = |v: &[crate::couplings::QuarticTerm]| v.iter().find(|t| t.indices == idx).map(|t| rat(-t.coefficient.clone()));
        let names: Vec<String> = idx.iter().map(|k| format!("A{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        b.push(
            TermClass::Quartic,
            nas,
            &refs,
            QUARTIC_LORENTZ,
            None,
            find(&computed).unwrap_or_default(),
            FormalScale::ONE,
            Some(find(&listed).unwrap_or_default()),
            false,
        );
    }

    // Vacuum energy `−V(Ψ₀)`, units m⁴/f.
    let v0 = potential_of_norm(&vacuum_norm_sq(p), p);
    let m4f = &(&(p.m() * p.m()) * &(p.m() * p.m())) / p.f();
    b.push(TermClass::Constant, assoc, &[], "", None, rat(-(&v0 / &m4f)), FormalScale::new(4, -2, 0), Some(CoeffElem::one()), false);

    let mut table = TermTable { terms: b.terms };
    table.canonicalize();
    Ok(table)
}
