//! The batch of checks behind `verify`.
//!
//! A check is `FAIL` only when the engine contradicts itself. A mismatch
//! between a computed value and a stated one is `FLAG`.

use num_complex::Complex64;
use octoweak_core::algebra::Entry;
use octoweak_core::couplings::{coupling_match, ChargeSet, Couplings};
use octoweak_core::fermion::{
    build_doublet, coupling_free, current_split, current_trace, kappas, stated_currents, stated_norm_current,
    yukawa_combo, yukawa_target, BilinearCombo, Doublet, Order, Part, KAPPA_STATED,
};
use octoweak_core::field::{
    boson_basis_change, boson_basis_inverse, d_basis_mass, higgs_param, lagrangian_terms, mass_matrix,
    mass_matrix_unit, ordering_report, potential_exact, potential_of_norm, radial_minimize, spectrum,
    vacuum_direction, vacuum_norm_sq, vacuum_state, vacuum_state_f64, FieldParams, NamedBosons, Spectrum, TermClass,
};
use octoweak_core::octonion::{
    associator, expected_sigma_product, quad_trace, triple_associator_trace, EpsTable, EpsTable3, EpsTable4,
    OctCoord, Zorn,
};
use octoweak_core::scalar::{CoeffElem, GaussQ, Rational, Surd};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lang::{eval_str, parse, ErrorCode};
use crate::report::{CheckResult, Module, Report, Status};

/// Inputs of a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub params: FieldParams,
    pub couplings: Couplings,
    pub seed: u64,
    /// Randomized cases per property check.
    pub cases: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { params: FieldParams::default(), couplings: Couplings::default(), seed: 0, cases: 1000 }
    }
}

impl VerifyConfig {
    /// Seed from `OCTOWEAK_SEED`, default 0.
    pub fn seed_from_env() -> Result<u64, String> {
        match std::env::var("OCTOWEAK_SEED") {
            Ok(s) => s.trim().parse().map_err(|_| format!("OCTOWEAK_SEED must be an integer, got `{s}`")),
            Err(_) => Ok(0),
        }
    }
}

/// Relative tolerance for floating-point claims.
pub const FLOAT_TOL: f64 = 1e-12;
/// Tolerance on the radial minimizer.
pub const RADIAL_TOL: f64 = 1e-9;

type Items = Vec<CheckResult>;

fn internal(m: Module, id: &str, anchor: &str, ok: bool, computed: impl Into<String>, claimed: impl Into<String>) -> CheckResult {
    CheckResult::new(m, id, anchor, computed, claimed, if ok { Status::Pass } else { Status::Fail })
}

fn claim(m: Module, id: &str, anchor: &str, ok: bool, computed: impl Into<String>, claimed: impl Into<String>) -> CheckResult {
    CheckResult::new(m, id, anchor, computed, claimed, if ok { Status::Pass } else { Status::Flag })
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.12e}")
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn mismatches(found: &[String], total: usize, noun: &str) -> String {
    if found.is_empty() {
        return format!("{total}/{total} {noun} agree");
    }
    let shown: Vec<&str> = found.iter().take(4).map(String::as_str).collect();
    let more = if found.len() > 4 { format!(", … ({} more)", found.len() - 4) } else { String::new() };
    format!("{}/{total} {noun} disagree: {}{more}", found.len(), shown.join("; "))
}

pub fn verify_all(cfg: &VerifyConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut items = Items::new();
    items.extend(scalar_checks(cfg, &mut rng));
    items.extend(octonion_checks(cfg, &mut rng));
    items.extend(field_checks(cfg, &mut rng));
    items.extend(fermion_checks(cfg));
    items.extend(cli_checks());
    Report::new(items)
}

// ---------------------------------------------------------------- scalar

fn random_gauss(rng: &mut ChaCha8Rng) -> GaussQ {
    let r = |rng: &mut ChaCha8Rng| Rational::frac(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    GaussQ::new(r(rng), r(rng))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> CoeffElem {
    let mut c = CoeffElem::zero();
    for m in octoweak_core::scalar::Monomial::all() {
        if rng.gen_bool(0.4) {
            c = &c + &CoeffElem::monomial(m, random_gauss(rng));
        }
    }
    c
}

fn scalar_checks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Items {
    let m = Module::ScalarRing;
    let mut out = Items::new();
    let stated = [
        (Surd::C0, Rational::frac(32, 257)),
        (Surd::Y0, &Rational::frac(257, 32) - &Rational::frac(5729, 2304)),
        (Surd::S2, Rational::integer(2)),
    ];
    for (s, want) in stated {
        let x = CoeffElem::surd(s);
        let sq = &x * &x;
        out.push(claim(
            m,
            &format!("surd_square_{}", s.name()),
            "normalization constants",
            sq == CoeffElem::from(want.clone()),
            sq.render(),
            want.to_string(),
        ));
    }

    let mut bad = Vec::new();
    for k in 0..cfg.cases {
        let (a, b, c) = (random_coeff(rng), random_coeff(rng), random_coeff(rng));
        let laws = [
            ("add_assoc", &(&a + &b) + &c == &a + &(&b + &c)),
            ("mul_assoc", &(&a * &b) * &c == &a * &(&b * &c)),
            ("mul_comm", &a * &b == &b * &a),
            ("distrib", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("conj_mul", (&a * &b).conj() == &a.conj() * &b.conj()),
            ("neg", (&a + &(-a.clone())).is_zero()),
        ];
        for (law, ok) in laws {
            if !ok {
                bad.push(format!("case {k}: {law}"));
            }
        }
    }
    out.push(internal(
        m,
        "ring_axioms_random",
        "exact coefficient ring",
        bad.is_empty(),
        mismatches(&bad, cfg.cases, "random cases"),
        "ring axioms",
    ));
    out
}

// ---------------------------------------------------------------- octonion

/// The coordinate rules as written, for the orders they are written in.
fn written_rule(i: usize, j: usize) -> Option<(i8, usize)> {
    let levi = EpsTable3::from_entries(&[([1, 2, 3], 1)]).expect("single entry");
    let plain = |k: usize| (1..=3).contains(&k);
    let hat = |k: usize| (5..=7).contains(&k);
    if i == 0 {
        return Some((1, j));
    }
    if j == 0 {
        return Some((1, i));
    }
    if i == j {
        return Some((-1, 0));
    }
    let eps = |a: usize, b: usize| -> (i8, usize) {
        let k = 6 - a - b;
        (levi.get([a, b, k]), k)
    };
    match (i, j) {
        (a, b) if plain(a) && plain(b) => Some(eps(a, b)),
        (a, b) if hat(a) && hat(b) => {
            let (s, k) = eps(a - 4, b - 4);
            Some((-s, k))
        }
        (a, b) if plain(a) && hat(b) => {
            if a == b - 4 {
                return Some((-1, 4));
            }
            let (s, k) = eps(a, b - 4);
            Some((-s, k + 4))
        }
        (a, 4) if plain(a) => Some((1, a + 4)),
        (4, b) if hat(b) => Some((1, b - 4)),
        _ => None,
    }
}

fn stated_generator_product(i: usize, j: usize) -> Option<(i8, usize)> {
    written_rule(i, j).or_else(|| written_rule(j, i).map(|(s, k)| (-s, k)))
}

fn gen(k: usize) -> OctCoord<GaussQ> {
    OctCoord::generator(k)
}

fn sigma(k: usize) -> Zorn<GaussQ> {
    Zorn::sigma(k).expect("index in range")
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Zorn<GaussQ> {
    let c: [GaussQ; 8] = std::array::from_fn(|_| GaussQ::int(rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
    Zorn::from_sigma_coords(&c)
}

fn eps_text<const N: usize>(t: &EpsTable<N>) -> String {
    let parts: Vec<String> = t
        .entries()
        .iter()
        .map(|(idx, s)| {
            let digits: String = idx.iter().map(|k| k.to_string()).collect();
            format!("{}{digits}", if *s < 0 { "-" } else { "+" })
        })
        .collect();
    parts.join(" ")
}

fn octonion_checks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Items {
    let m = Module::OctonionCore;
    let mut out = Items::new();

    let mut bad = Vec::new();
    let mut uncovered = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let got = gen(i).mul(&gen(j));
            match stated_generator_product(i, j) {
                None => uncovered.push(format!("e{i}e{j}")),
                Some((s, k)) => {
                    if got != gen(k).scale(&GaussQ::int(s as i64, 0)) {
                        bad.push(format!("e{i}e{j}"));
                    }
                }
            }
        }
    }
    bad.extend(uncovered.iter().map(|p| format!("{p} not covered by the rules")));
    out.push(claim(
        m,
        "bao_table_64",
        "multiplication rules of the generators e0..e7",
        bad.is_empty(),
        mismatches(&bad, 64, "generator products"),
        "64 products fixed by the coordinate rules",
    ));

    let eps3 = EpsTable3::structure_constants();
    let mut bad = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            if sigma(i).star(&sigma(j)) != expected_sigma_product(&eps3, i, j) {
                bad.push(format!("S{i}*S{j}"));
            }
        }
    }
    out.push(claim(
        m,
        "sigma_table_64",
        "Σⁱ*Σʲ = δⁱʲ + iεⁱʲᵏΣᵏ with the seven structure constants",
        bad.is_empty(),
        mismatches(&bad, 64, "Σ products"),
        format!("ε³ = {}", eps_text(&eps3)),
    ));

    let from_rules = EpsTable3::from_generator_products();
    let agree = from_rules.as_ref().is_ok_and(|t| *t == eps3);
    out.push(claim(
        m,
        "eps3_conventions_agree",
        "ε³ read from the coordinate rules versus the listed structure constants",
        agree,
        match &from_rules {
            Ok(t) => format!("coordinate rules give ε³ = {}", eps_text(t)),
            Err(e) => format!("coordinate rules are inconsistent: {e}"),
        },
        format!("ε³ = {}", eps_text(&eps3)),
    ));

    let mut bad = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let lhs = gen(i).mul(&gen(j)).to_zorn();
            let rhs = gen(i).to_zorn().star(&gen(j).to_zorn());
            if lhs != rhs {
                bad.push(format!("e{i}e{j}"));
            }
        }
    }
    out.push(claim(
        m,
        "generator_homomorphism_64",
        "eᵏ ↦ −iΣᵏ carries the coordinate product to the star product",
        bad.is_empty(),
        mismatches(&bad, 64, "generator pairs"),
        "homomorphism on all pairs",
    ));

    let computed = EpsTable4::from_associators();
    let listed = EpsTable4::listed();
    out.push(internal(
        m,
        "eps4_parity_consistent",
        "associators define a totally antisymmetric ε⁴",
        computed.is_ok(),
        match &computed {
            Ok(t) => format!("{} canonical quadruples: {}", t.len(), eps_text(t)),
            Err(e) => e.to_string(),
        },
        "antisymmetric table",
    ));
    let computed = computed.unwrap_or_else(|_| EpsTable4::from_entries(&[]).expect("empty"));
    let supports = |t: &EpsTable4| t.entries().iter().map(|(idx, _)| *idx).collect::<Vec<_>>();
    out.push(claim(
        m,
        "eps4_supports",
        "seven index quadruples with ε⁴ equal to one",
        supports(&computed) == supports(&listed),
        eps_text(&computed),
        eps_text(&listed),
    ));
    let sign_bad: Vec<String> = listed
        .entries()
        .iter()
        .filter(|(idx, s)| computed.get(*idx) != *s)
        .map(|(idx, s)| {
            let d: String = idx.iter().map(|k| k.to_string()).collect();
            format!("ε{d} computed {} listed {s}", computed.get(*idx))
        })
        .collect();
    out.push(claim(
        m,
        "eps4_signs",
        "ε⁴ equal to the unit on the listed quadruples",
        sign_bad.is_empty(),
        mismatches(&sign_bad, listed.len(), "signs"),
        eps_text(&listed),
    ));

    let mut bad_computed = Vec::new();
    let mut bad_listed = Vec::new();
    for i in 1..8 {
        for j in 1..8 {
            for k in 1..8 {
                let x = associator(&gen(i), &gen(j), &gen(k));
                let expect = |t: &EpsTable4| {
                    (1..8).fold(OctCoord::<GaussQ>::zero(), |acc, l| {
                        acc.plus(&gen(l).scale(&GaussQ::int(2 * t.get([i, j, k, l]) as i64, 0)))
                    })
                };
                if x != expect(&computed) {
                    bad_computed.push(format!("{{e{i},e{j},e{k}}}"));
                }
                if x != expect(&listed) {
                    bad_listed.push(format!("{{e{i},e{j},e{k}}}"));
                }
            }
        }
    }
    out.push(internal(
        m,
        "associator_343_computed",
        "{eⁱ,eʲ,eᵏ} = 2εⁱʲᵏˡeˡ with ε⁴ read off the associators",
        bad_computed.is_empty(),
        mismatches(&bad_computed, 343, "triples"),
        "343 triples",
    ));
    out.push(claim(
        m,
        "associator_343_listed",
        "{eⁱ,eʲ,eᵏ} = 2εⁱʲᵏˡeˡ with the listed ε⁴",
        bad_listed.is_empty(),
        mismatches(&bad_listed, 343, "triples"),
        "343 triples",
    ));

    let mut bad8 = Vec::new();
    let mut bad16 = Vec::new();
    let mut sample = String::new();
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                for d in 0..8 {
                    let t = quad_trace(a, b, c, d).expect("indices in range");
                    let want = |factor: i64, tab: &EpsTable4| GaussQ::int(factor * tab.get([a, b, c, d]) as i64, 0);
                    if t != want(8, &listed) {
                        bad8.push(format!("{a}{b}{c}{d}: {}", t.render()));
                    }
                    if t != want(16, &computed) {
                        bad16.push(format!("{a}{b}{c}{d}: {}", t.render()));
                    }
                    if [a, b, c, d] == [1, 2, 4, 7] {
                        sample = t.render();
                    }
                }
            }
        }
    }
    out.push(claim(
        m,
        "quad_trace_4096",
        "tr{Σᵃ,Σᵇ,Σᶜ,Σᵈ} = 8εᵃᵇᶜᵈ",
        bad8.is_empty(),
        format!("tr(1,2,4,7) = {sample}; {}", mismatches(&bad8, 4096, "quadruples")),
        "8εᵃᵇᶜᵈ",
    ));
    out.push(internal(
        m,
        "quad_trace_4096_computed",
        "tr{Σᵃ,Σᵇ,Σᶜ,Σᵈ} against the associator-derived ε⁴",
        bad16.is_empty(),
        mismatches(&bad16, 4096, "quadruples"),
        "16εᵃᵇᶜᵈ",
    ));

    let mut bad = Vec::new();
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let t = triple_associator_trace(a, b, c).expect("indices in range");
                if !t.is_zero() {
                    bad.push(format!("{a}{b}{c}: {}", t.render()));
                }
            }
        }
    }
    out.push(internal(
        m,
        "triple_trace_zero_512",
        "trace of a three-element associator",
        bad.is_empty(),
        mismatches(&bad, 512, "triples"),
        "0",
    ));

    let mut bad = Vec::new();
    for k in 0..8 {
        if sigma(k).conj() != sigma(k) {
            bad.push(format!("Σ{k}"));
        }
        if k > 0 {
            let t: Zorn<GaussQ> = Zorn::sigma_tilde(k).expect("index in range");
            if t.conj() != t.negated() {
                bad.push(format!("Σ̃{k}"));
            }
        }
    }
    out.push(internal(
        m,
        "sigma_hermiticity",
        "Σᵏ hermitian, Σ̃ᵏ antihermitian",
        bad.is_empty(),
        mismatches(&bad, 15, "basis elements"),
        "Σ⁺ = Σ, Σ̃⁺ = −Σ̃",
    ));

    let n = cfg.cases;
    let (mut alt, mut anti, mut clos, mut conj) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for k in 0..n {
        let (a, b, c) = (random_octonion(rng), random_octonion(rng), random_octonion(rng));
        if !associator(&a, &a, &b).is_zero() || !associator(&a, &b, &b).is_zero() {
            alt.push(format!("case {k}"));
        }
        let x = associator(&a, &b, &c);
        if associator(&b, &a, &c) != x.negated() || associator(&a, &c, &b) != x.negated() {
            anti.push(format!("case {k}"));
        }
        let ab = a.star(&b);
        if !ab.is_octonionic() {
            clos.push(format!("case {k}"));
        }
        if ab.conj() != b.conj().star(&a.conj()) {
            conj.push(format!("case {k}"));
        }
    }
    for (id, anchor, bad, law) in [
        ("alternativity_random", "alternative algebra", alt, "{a,a,b} = {a,b,b} = 0"),
        ("associator_antisymmetry_random", "totally antisymmetric associator", anti, "{a,b,c} = −{b,a,c} = −{a,c,b}"),
        ("octonionic_closure_random", "star product preserves traceless blocks", clos, "closed"),
        ("conj_antihomomorphism_random", "(u*v)⁺ = v⁺*u⁺", conj, "(u*v)⁺ = v⁺*u⁺"),
    ] {
        out.push(internal(m, id, anchor, bad.is_empty(), mismatches(&bad, n, "random cases"), law));
    }
    out
}

// ---------------------------------------------------------------- field

fn rayleigh(m: &[Vec<f64>], v: &[f64]) -> (f64, f64) {
    let mv: Vec<f64> = m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect();
    let norm: f64 = v.iter().map(|x| x * x).sum();
    let lambda = mv.iter().zip(v).map(|(a, b)| a * b).sum::<f64>() / norm;
    let resid = mv.iter().zip(v).map(|(a, b)| (a - lambda * b).powi(2)).sum::<f64>().sqrt();
    (lambda, resid)
}

/// A named mass claim compared against the spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct MassClaim {
    pub name: &'static str,
    pub claimed: f64,
    pub computed: f64,
    pub status: Status,
    pub detail: String,
}

/// Mass claims for the W, C, D, E bosons and the photon at the given inputs.
pub fn mass_claims(c: &ChargeSet, p: &FieldParams) -> Result<(Spectrum, Vec<MassClaim>), String> {
    let (mf, ff) = p.to_f64();
    let m2f = mf * mf / ff;
    let cp = &c.couplings;
    let mm = mass_matrix(c, p).to_f64();
    let sp = spectrum(&mm).map_err(|e| e.to_string())?;
    let scale = sp.eigenvalues.iter().fold(1.0f64, |a, b| a.max(b.abs()));
    let in_spectrum = |x: f64| sp.eigenvalues.iter().any(|e| (e - x).abs() <= FLOAT_TOL * scale);
    let mut out = Vec::new();
    let mut push = |name: &'static str, claimed: f64, computed: f64, detail: String| {
        let status = if close(computed, claimed, FLOAT_TOL) { Status::Pass } else { Status::Flag };
        out.push(MassClaim { name, claimed, computed, status, detail });
    };
    let unit = |k: usize| -> Vec<f64> { (0..8).map(|j| if j == k { 1.0 } else { 0.0 }).collect() };
    for (name, k, g) in [("W", 1, cp.g.to_f64()), ("C", 4, cp.g_k(4).to_f64()), ("E", 7, cp.g_k(7).to_f64())] {
        let (lambda, resid) = rayleigh(&mm, &unit(k));
        let eig = resid <= FLOAT_TOL * scale && in_spectrum(lambda);
        let detail = format!("A{k} eigenvector: {eig}, residual {}", fmt_f64(resid));
        push(name, g * g * m2f / 2.0, lambda, detail);
    }
    let ga2 = cp.g_a_sq().to_f64();
    let dm = d_basis_mass(&mass_matrix_unit(c), cp);
    let d_coeff = dm.as_ref().map_or(0.0, |d| d.d_dbar.re.to_f64());
    let d_detail = match &dm {
        Some(d) => format!("D̄D coefficient {} g_a²m²/f", d.d_dbar.render()),
        None => "g_a = 0".to_string(),
    };
    push("D", ga2 * m2f, d_coeff * ga2 * m2f, d_detail);
    let block = vec![vec![mm[0][0], mm[0][3]], vec![mm[3][0], mm[3][3]]];
    let small = spectrum(&block).map_err(|e| e.to_string())?;
    let photon = small.eigenvalues[0];
    let photon = if photon.abs() <= FLOAT_TOL * scale { 0.0 } else { photon };
    push("photon", 0.0, photon, "lowest eigenvalue of the (B, A3) block".into());
    Ok((sp, out))
}

fn field_checks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Items {
    let m = Module::FieldTheory;
    let p = &cfg.params;
    let mut out = Items::new();
    let two_m2f = &p.m2_over_f() * &Rational::integer(2);

    let unit_norm = vacuum_direction::<GaussQ>().norm_sq();
    out.push(claim(
        m,
        "vacuum_direction_norm",
        "norm² of (0, iσ³; 0, I)",
        unit_norm == GaussQ::int(4, 0),
        unit_norm.render(),
        "4",
    ));

    let n = vacuum_norm_sq(p);
    let exact = vacuum_state(p).ok();
    let exact_norm = exact.as_ref().map(Zorn::norm_sq);
    let ok = n == two_m2f && exact_norm.as_ref().is_none_or(|x| *x == CoeffElem::from(two_m2f.clone()));
    let shown = match &exact_norm {
        Some(x) => format!("{} (state {})", n, x.render()),
        None => format!("{n} (m/√(2f) outside the surd ring)"),
    };
    out.push(claim(m, "vacuum_norm", "norm² of Ψ₀ equals 2m²/f", ok, shown, two_m2f.to_string()));

    let v = potential_of_norm(&n, p);
    let m4f = &(&(p.m() * p.m()) * &(p.m() * p.m())) / p.f();
    let want = -m4f;
    let v_state = exact.as_ref().map(|s| potential_exact(s, p));
    let ok = v == want && v_state.as_ref().is_none_or(|x| *x == CoeffElem::from(want.clone()));
    out.push(claim(m, "vacuum_potential", "V(Ψ₀) = −m⁴/f", ok, v.to_string(), want.to_string()));

    let (mf, ff) = p.to_f64();
    let mut points = vec![(1.0, 2.0), (2.0, 1.0), (3.0, 5.0)];
    if !points.contains(&(mf, ff)) {
        points.push((mf, ff));
    }
    for (mm, fv) in points {
        let id = format!("radial_minimum_m{mm}_f{fv}");
        let want = 2.0 * mm * mm / fv;
        let (ok, shown) = match radial_minimize(mm, fv, RADIAL_TOL * 1e-3) {
            Ok(x) => (close(x, want, RADIAL_TOL), fmt_f64(x)),
            Err(e) => (false, e.to_string()),
        };
        out.push(claim(m, &id, "minimum of V at norm² = 2m²/f", ok, shown, fmt_f64(want)));
    }

    let center = higgs_param(0.0, &[0.0; 7], mf, ff);
    let vac = vacuum_state_f64(mf, ff);
    let ok = match (&center, &vac) {
        (Ok(a), Ok(b)) => {
            let d = a.minus(b);
            let ok = [&d.lambda, &d.xi].into_iter().chain(d.a.entries()).chain(d.b.entries()).all(|z| z.norm() < FLOAT_TOL);
            ok
        }
        _ => false,
    };
    out.push(internal(m, "higgs_param_at_origin", "Higgs parametrization at σ = θ = 0", ok, ok.to_string(), "Ψ₀"));

    let cs = coupling_match(&cfg.couplings);
    let unit = mass_matrix_unit(&cs);
    out.push(internal(m, "mass_matrix_symmetric", "A^aA^b mass form", unit.is_symmetric(), unit.is_symmetric().to_string(), "true"));

    let rep = ordering_report();
    let ok = rep.order_mismatches.is_empty();
    let computed = if ok {
        "split, left-nested and right-nested orders agree".to_string()
    } else {
        format!("{} entries depend on the association order", rep.order_mismatches.len())
    };
    out.push(claim(m, "mass_ordering", "unparenthesized triple product Ψ̄₀*Σᵃ*Σᵇ*Ψ₀", ok, computed, "order independent"));
    out.push(internal(
        m,
        "mass_tensor_symmetric_part",
        "antisymmetric part of the mass tensor is dropped",
        rep.asymmetric.iter().all(|(_, _, x, y)| x.re == y.re),
        format!("{} imaginary antisymmetric entries", rep.asymmetric.len()),
        "real part symmetric",
    ));

    let det = &(unit.get(0, 0) * unit.get(3, 3)) - &(unit.get(0, 3) * unit.get(3, 0));
    out.push(internal(
        m,
        "photon_block_singular",
        "{B, A3} block of the mass matrix",
        det.is_zero(),
        format!("det = {det}"),
        "0",
    ));

    match mass_claims(&cs, p) {
        Ok((sp, claims)) => {
            let mm = mass_matrix(&cs, p).to_f64();
            let err = sp.reconstruction_error(&mm);
            out.push(internal(
                m,
                "spectrum_reconstruction",
                "V·diag(λ)·Vᵀ reproduces the mass matrix",
                err < FLOAT_TOL,
                fmt_f64(err),
                format!("< {}", fmt_f64(FLOAT_TOL)),
            ));
            let scale = sp.eigenvalues.iter().fold(1.0f64, |a, b| a.max(b.abs()));
            let zeros = sp.zero_modes(FLOAT_TOL * scale);
            let eig: Vec<String> = sp.eigenvalues.iter().map(|x| fmt_f64(*x)).collect();
            out.push(claim(
                m,
                "spectrum_zero_modes",
                "a single massless vector boson",
                zeros == 1,
                format!("{zeros} zero modes; eigenvalues [{}]", eig.join(", ")),
                "1",
            ));
            for c in claims {
                out.push(CheckResult::new(
                    m,
                    format!("mass_claim_{}", c.name),
                    format!("{} mass coefficient", c.name),
                    format!("{} ({})", fmt_f64(c.computed), c.detail),
                    fmt_f64(c.claimed),
                    c.status,
                ));
            }
            out.push(photon_direction(&sp, &cs.couplings));
        }
        Err(e) => out.push(internal(m, "spectrum_reconstruction", "mass spectrum", false, e, "converged")),
    }

    let mut bad = Vec::new();
    let theta = cfg.couplings.theta();
    for k in 0..cfg.cases.min(100) {
        let a: [Complex64; 8] = std::array::from_fn(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
        match boson_basis_change(&a, theta, &cfg.couplings).and_then(|n| boson_basis_inverse(&n, theta, &cfg.couplings)) {
            Ok(back) => {
                if a.iter().zip(&back).any(|(x, y)| (x - y).norm() > 1e-12) {
                    bad.push(format!("case {k}"));
                }
            }
            Err(e) => bad.push(format!("case {k}: {e}")),
        }
    }
    out.push(internal(
        m,
        "boson_basis_round_trip",
        "named boson basis and its inverse",
        bad.is_empty(),
        mismatches(&bad, cfg.cases.min(100), "random cases"),
        "identity to 1e-12",
    ));

    out.extend(term_checks(&cs, p));
    out
}

fn photon_direction(sp: &Spectrum, c: &Couplings) -> CheckResult {
    let m = Module::FieldTheory;
    let anchor = "photon = A³sinθ + Bcosθ is the massless combination";
    let scale = sp.eigenvalues.iter().fold(1.0f64, |a, b| a.max(b.abs()));
    let Some(k) = sp.eigenvalues.iter().position(|e| e.abs() <= FLOAT_TOL * scale) else {
        return claim(m, "photon_direction", anchor, false, "no zero mode", "massless photon");
    };
    let v: [Complex64; 8] = std::array::from_fn(|j| Complex64::new(sp.vectors[k][j], 0.0));
    match boson_basis_change(&v, c.theta(), c) {
        Ok(NamedBosons { photon, z, .. }) => {
            let ok = z.norm() < 1e-9;
            claim(
                m,
                "photon_direction",
                anchor,
                ok,
                format!("zero mode has photon {} and Z {}", fmt_f64(photon.norm()), fmt_f64(z.norm())),
                "Z component 0",
            )
        }
        Err(e) => claim(m, "photon_direction", anchor, false, e.to_string(), "Z component 0"),
    }
}

fn term_checks(cs: &ChargeSet, p: &FieldParams) -> Items {
    let m = Module::FieldTheory;
    let mut out = Items::new();
    let table = match lagrangian_terms(cs, p) {
        Ok(t) => t,
        Err(e) => return vec![internal(m, "lagrangian_terms", "broken-phase Lagrangian", false, e.to_string(), "built")],
    };
    let dups = table.duplicate_keys();
    out.push(internal(
        m,
        "lagrangian_unique_keys",
        "term table keyed by class, fields and bilinear",
        dups.is_empty(),
        format!("{} terms, duplicates: [{}]", table.terms.len(), dups.join(", ")),
        "no duplicates",
    ));
    let e_current: Vec<String> = table
        .terms
        .iter()
        .filter(|t| t.class == TermClass::Current && t.fields.iter().any(|f| f == "E") && !t.coefficient.is_zero())
        .map(|t| t.key())
        .collect();
    out.push(claim(
        m,
        "e_boson_decoupled",
        "the E boson does not interact with matter",
        e_current.is_empty(),
        if e_current.is_empty() { "no E current".to_string() } else { e_current.join(", ") },
        "no E current",
    ));
    for t in &table.terms {
        let Some(stated) = &t.claimed else { continue };
        let ok = if t.approximate {
            let (re, im) = t.coefficient.to_f64_pair();
            let (sre, sim) = stated.to_f64_pair();
            (re.round() - sre).abs() < 0.5 && (im.round() - sim).abs() < 0.5
        } else {
            t.coefficient == *stated
        };
        let scale = t.scale.render();
        let unit = if scale == "1" { String::new() } else { format!(" [{scale}]") };
        let approx = if t.approximate { "≈ " } else { "" };
        out.push(claim(
            m,
            &format!("term:{}", t.key()),
            &format!("{} term", t.class.name()),
            ok,
            format!("{}{unit}", t.coefficient.render()),
            format!("{approx}{}{unit}", stated.render()),
        ));
    }
    out
}

// ---------------------------------------------------------------- fermion

fn part_name(p: Part) -> &'static str {
    match p {
        Part::Full => "full",
        Part::Assoc => "assoc",
        Part::Nonassoc => "nonassoc",
    }
}

fn is_hermitian(t: &BilinearCombo) -> bool {
    t.terms().all(|(b, c)| t.coeff(&b.adjoint()) == c.conj())
}

fn fermion_checks(cfg: &VerifyConfig) -> Items {
    let m = Module::FermionSymbolic;
    let d: Doublet = build_doublet();
    let mut out = Items::new();

    let conj_l: Zorn<_> = d.l.conj();
    out.push(claim(m, "lbar_is_conjugate", "explicit L̄ equals L⁺", d.lbar == conj_l, (d.lbar == conj_l).to_string(), "true"));

    let splits: Vec<_> = (0..8).map(|a| current_split(&d, a).expect("index in range")).collect();

    let norm = current_trace(&d, 0, Order::Right).expect("index in range");
    let stated = stated_norm_current();
    out.push(claim(m, "current_a0_norm", "tr L̄*L after reducing c₀² and y₀²", norm == stated, norm.render(), stated.render()));

    let mut bad = Vec::new();
    for s in splits.iter().take(4) {
        if s.left != s.right {
            bad.push(format!("a = {}", s.a));
        }
    }
    out.push(claim(
        m,
        "current_order_independence_0123",
        "order of multiplication does not matter for a = 0..3",
        bad.is_empty(),
        mismatches(&bad, 4, "currents"),
        "(L̄*Σᵃ)*L = L̄*(Σᵃ*L)",
    ));

    let s7 = &splits[7];
    let zero = s7.left.is_empty() && s7.right.is_empty();
    out.push(claim(
        m,
        "sigma7_current_zero",
        "g₇ current vanishes",
        zero,
        format!("left {}, right {}", s7.left.render(), s7.right.render()),
        "0",
    ));

    for st in stated_currents() {
        let s = &splits[st.a];
        let raw = match st.part {
            Part::Full => &s.left,
            Part::Assoc => &s.assoc,
            Part::Nonassoc => &s.nonassoc,
        };
        let got = coupling_free(raw);
        out.push(claim(
            m,
            &format!("current_a{}_{}", st.a, part_name(st.part)),
            &format!("{} part of the a = {} current per unit coupling", part_name(st.part), st.a),
            got == st.value,
            got.render(),
            st.value.render(),
        ));
    }

    let mut bad = Vec::new();
    for s in &splits {
        if !s.nonassoc.is_empty() {
            bad.push(format!("a = {}", s.a));
        }
    }
    out.push(internal(
        m,
        "current_nonassoc_vanishes",
        "tr{L̄, Σᵃ, L} from the zero three-element associator trace",
        bad.is_empty(),
        mismatches(&bad, 8, "currents"),
        "0 for every a",
    ));

    let mut bad = Vec::new();
    for s in &splits {
        if !is_hermitian(&s.left) || !is_hermitian(&s.right) {
            bad.push(format!("a = {}", s.a));
        }
    }
    out.push(internal(m, "current_hermiticity", "currents are self-adjoint", bad.is_empty(), mismatches(&bad, 8, "currents"), "hermitian"));

    if let Ok(k) = kappas(&d) {
        for (id, val, stated) in [("kappa1", &k.kappa1, KAPPA_STATED.0), ("kappa2", &k.kappa2, KAPPA_STATED.1)] {
            let (x, _) = val.to_f64_pair();
            out.push(claim(
                m,
                id,
                "normalization of the A⁴ current",
                x.round() as i64 == stated,
                format!("{} ≈ {}", val.render(), fmt_f64(x)),
                format!("≈ {stated}"),
            ));
        }
    }

    let c = &cfg.couplings;
    let cs = coupling_match(c);
    let c0 = CoeffElem::surd(Surd::C0);
    let c0sq = &c0 * &c0;
    let r = |x: &Rational| CoeffElem::from(x.clone());
    let mut bad = Vec::new();
    if &r(&cs.q[0]) * &c0sq != -r(&c.g1) {
        bad.push("q0c0² = -g1".into());
    }
    for k in 1..4 {
        if &r(&cs.q[k]) * &c0sq != r(&c.g) {
            bad.push(format!("q{k}c0² = g"));
        }
    }
    for k in 4..8 {
        if &r(&cs.q[k]) * &c0sq != r(c.g_k(k)) {
            bad.push(format!("q{k}c0² = g{k}"));
        }
    }
    let h_back = (&cs.h_tilde * &c0) * CoeffElem::surd(Surd::S2).halved();
    if h_back != r(&c.h) {
        bad.push("h̃c0/√2 = h".into());
    }
    out.push(claim(
        m,
        "coupling_match",
        "q⁰c₀² = −g⁽¹⁾, qᵏc₀² = g, h̃c₀/√2 = h",
        bad.is_empty(),
        mismatches(&bad, 9, "identities"),
        "exact identities",
    ));

    let y = yukawa_combo(&d, &vacuum_direction::<CoeffElem>(), &cs.h_tilde);
    let target = yukawa_target(&r(&c.h));
    out.push(claim(
        m,
        "yukawa_identity",
        "h̃(tr(L̄*Ψ₀)R + R̄tr(Ψ̄₀*L)) = √2h(ēᴸeᴿ + ēᴿeᴸ)m/√f",
        y == target,
        y.render(),
        target.render(),
    ));
    out
}

// ---------------------------------------------------------------- cli

fn cli_checks() -> Items {
    let m = Module::Cli;
    let mut out = Items::new();
    let chain = parse("S1*S2*S3");
    let rejected = matches!(&chain, Err(e) if e.code == ErrorCode::ChainStar);
    out.push(internal(
        m,
        "parser_chain_star",
        "unparenthesized star chains are rejected",
        rejected,
        match chain {
            Ok(e) => format!("accepted as {e}"),
            Err(e) => e.to_string(),
        },
        "E_CHAIN_STAR",
    ));
    for (id, src, want, is_claim) in [
        ("eval_sigma_product", "(S1*S2)", "iΣ³", false),
        ("eval_vacuum_norm", "norm2(Psi0(1,2))", "1", true),
        ("eval_eps4", "eps4(1,2,4,7)", "8", true),
    ] {
        let got = eval_str(src).map(|v| v.render()).unwrap_or_else(|e| e.to_string());
        let ok = got == want;
        let anchor = format!("eval {src}");
        out.push(if is_claim { claim(m, id, &anchor, ok, got, want) } else { internal(m, id, &anchor, ok, got, want) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn written_rules_cover_every_pair() {
        for i in 0..8 {
            for j in 0..8 {
                assert!(stated_generator_product(i, j).is_some(), "e{i}e{j}");
            }
        }
        assert_eq!(stated_generator_product(5, 1), Some((1, 4)));
        assert_eq!(stated_generator_product(4, 1), Some((-1, 5)));
    }

    #[test]
    fn small_run_is_deterministic() {
        let cfg = VerifyConfig { cases: 5, ..VerifyConfig::default() };
        let a = verify_all(&cfg).to_json();
        assert_eq!(a, verify_all(&cfg).to_json());
    }
}
