use octoweak_core::algebra::Entry;
use octoweak_core::fermion::{BilinearCombo, FermionLin};
use octoweak_core::octonion::{Mat2, OctCoord, Zorn};
use octoweak_core::scalar::CoeffElem;
use serde_json::{json, Value as Json};

/// Result of evaluating an expression.
#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Scalar(CoeffElem),
    /// Element in `e⁰..e⁷` coordinates.
    Coord(OctCoord<CoeffElem>),
    /// Zorn matrix with numeric entries.
    Octonion(Zorn<CoeffElem>),
    /// Zorn matrix over fermion symbols, such as `L` or `L̄`.
    Spinor(Zorn<FermionLin>),
    /// Linear combination of fermion symbols, such as a trace of a spinor.
    Fermion(FermionLin),
    /// Zorn matrix over fermion bilinears.
    BilinearZorn(Zorn<BilinearCombo>),
    Bilinear(BilinearCombo),
    Tuple(Vec<Value>),
}

const SUPERSCRIPT: [char; 8] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷'];

pub fn superscript(k: usize) -> char {
    SUPERSCRIPT[k]
}

/// `coefficient·symbol`, dropping unit coefficients and juxtaposing `±i`.
fn coeff_symbol(c: &CoeffElem, sym: &str) -> (bool, String) {
    let text = c.render();
    if !c.is_single_term() {
        // Complex single terms already render parenthesized.
        let wrapped = c.terms().count() == 1 && text.starts_with('(');
        return (false, if wrapped { format!("{text}·{sym}") } else { format!("({text})·{sym}") });
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    };
    let s = match body.as_str() {
        "1" => sym.to_string(),
        "i" => format!("i{sym}"),
        _ => format!("{body}·{sym}"),
    };
    (neg, s)
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coordinates in `Σ⁰..Σ⁷` plus the coefficients of `Ω_A = (0, I; 0, 0)` and
/// `Ω_B = (0, 0; I, 0)` for blocks with a trace.
pub fn extended_sigma_coords(z: &Zorn<CoeffElem>) -> ([CoeffElem; 8], CoeffElem, CoeffElem) {
    let wa = z.a.trace().halved();
    let wb = z.b.trace().halved();
    let mut rest = z.clone();
    rest.a = rest.a.minus(&Mat2::identity().scale(&wa));
    rest.b = rest.b.minus(&Mat2::identity().scale(&wb));
    let c = rest.sigma_coords().expect("traceless after removing Ω parts");
    (c, wa, wb)
}

pub fn render_sigma(z: &Zorn<CoeffElem>) -> String {
    let (c, wa, wb) = extended_sigma_coords(z);
    let mut parts = Vec::new();
    for (k, ck) in c.iter().enumerate() {
        if !ck.is_zero() {
            parts.push(coeff_symbol(ck, &format!("Σ{}", superscript(k))));
        }
    }
    for (w, sym) in [(wa, "Ω_A"), (wb, "Ω_B")] {
        if !w.is_zero() {
            parts.push(coeff_symbol(&w, sym));
        }
    }
    join_signed(parts)
}

pub fn render_coord(x: &OctCoord<CoeffElem>) -> String {
    let parts = (0..8)
        .filter(|&k| !x.alpha[k].is_zero())
        .map(|k| coeff_symbol(&x.alpha[k], &format!("e{}", superscript(k))))
        .collect();
    join_signed(parts)
}

fn render_blocks<T>(z: &Zorn<T>, r: impl Fn(&T) -> String) -> String {
    let m = |b: &Mat2<T>| format!("[[{}, {}], [{}, {}]]", r(&b.m[0][0]), r(&b.m[0][1]), r(&b.m[1][0]), r(&b.m[1][1]));
    format!("{{λ: {}; A: {}; B: {}; ξ: {}}}", r(&z.lambda), m(&z.a), m(&z.b), r(&z.xi))
}

fn blocks_json<T>(z: &Zorn<T>, r: impl Fn(&T) -> String) -> Json {
    let m = |b: &Mat2<T>| json!([[r(&b.m[0][0]), r(&b.m[0][1])], [r(&b.m[1][0]), r(&b.m[1][1])]]);
    json!({ "lambda": r(&z.lambda), "a": m(&z.a), "b": m(&z.b), "xi": r(&z.xi) })
}

fn coeff_terms_json(c: &CoeffElem) -> Vec<Json> {
    c.terms()
        .map(|(m, g)| json!({ "monomial": m.name(), "re": g.re.to_string(), "im": g.im.to_string() }))
        .collect()
}

/// `{bar, ket, coeff_re, coeff_im, monomial}` per bilinear and monomial.
pub fn bilinear_json(b: &BilinearCombo) -> Vec<Json> {
    let mut out = Vec::new();
    for (bl, c) in b.terms() {
        for (m, g) in c.terms() {
            out.push(json!({
                "bar": bl.bar.bar().ascii(),
                "ket": bl.ket.ascii(),
                "coeff_re": g.re.to_string(),
                "coeff_im": g.im.to_string(),
                "monomial": m.name(),
            }));
        }
    }
    out
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Coord(_) => "coord",
            Value::Octonion(_) => "octonion",
            Value::Spinor(_) => "spinor",
            Value::Fermion(_) => "fermion",
            Value::BilinearZorn(_) => "bilinear_zorn",
            Value::Bilinear(_) => "bilinear",
            Value::Tuple(_) => "tuple",
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Scalar(c) => c.render(),
            Value::Coord(x) => render_coord(x),
            Value::Octonion(z) => render_sigma(z),
            Value::Spinor(z) => render_blocks(z, FermionLin::render),
            Value::Fermion(f) => f.render(),
            Value::BilinearZorn(z) => render_blocks(z, BilinearCombo::render),
            Value::Bilinear(b) => b.render(),
            Value::Tuple(items) => {
                let parts: Vec<String> = items.iter().map(Value::render).collect();
                format!("({})", parts.join(", "))
            }
        }
    }

    pub fn to_json(&self) -> Json {
        let text = self.render();
        let kind = self.kind();
        match self {
            Value::Scalar(c) => json!({ "type": kind, "text": text, "terms": coeff_terms_json(c) }),
            Value::Coord(x) => {
                let coords: Vec<String> = x.alpha.iter().map(CoeffElem::render).collect();
                json!({ "type": kind, "text": text, "coords": coords })
            }
            Value::Octonion(z) => {
                let (c, wa, wb) = extended_sigma_coords(z);
                let coords: Vec<String> = c.iter().map(CoeffElem::render).collect();
                json!({ "type": kind, "text": text, "sigma": coords, "omega_a": wa.render(), "omega_b": wb.render() })
            }
            Value::Spinor(z) => json!({ "type": kind, "text": text, "blocks": blocks_json(z, FermionLin::render) }),
            Value::Fermion(f) => {
                let terms: Vec<Json> =
                    f.terms().map(|(s, c)| json!({ "symbol": s.ascii(), "coeff": c.render() })).collect();
                json!({ "type": kind, "text": text, "terms": terms })
            }
            Value::BilinearZorn(z) => {
                json!({ "type": kind, "text": text, "blocks": blocks_json(z, BilinearCombo::render) })
            }
            Value::Bilinear(b) => json!({ "type": kind, "text": text, "terms": bilinear_json(b) }),
            Value::Tuple(items) => {
                json!({ "type": kind, "text": text, "items": items.iter().map(Value::to_json).collect::<Vec<_>>() })
            }
        }
    }
}
