use octoweak_core::algebra::{Conjugate, Entry};
use octoweak_core::fermion::{build_doublet, BilinearCombo, FermionLin};
use octoweak_core::field::{vacuum_state, FieldParams};
use octoweak_core::octonion::{quad_trace, OctCoord, Zorn};
use octoweak_core::scalar::{CoeffElem, Rational, Surd};

use super::ast::{Expr, Func, Lepton, Node, ScalarLit};
use super::value::Value;
use super::{parse, ErrorCode, LangError, Pos};

type R = Result<Value, LangError>;

pub fn eval_str(src: &str) -> R {
    eval(&parse(src)?)
}

pub fn eval(e: &Expr) -> R {
    let pos = e.pos;
    match &e.node {
        Node::Coord(k) => Ok(Value::Coord(OctCoord::generator(*k))),
        Node::Sigma(k) => Ok(Value::Octonion(Zorn::sigma(*k).expect("parser bounds the index"))),
        Node::Lepton(which) => {
            let d = build_doublet();
            Ok(Value::Spinor(match which {
                Lepton::L => d.l,
                Lepton::Lbar => d.lbar,
            }))
        }
        Node::Scalar(s) => Ok(Value::Scalar(scalar_lit(s))),
        Node::ScalarMul(s, x) => scale(&scalar_lit(s), eval(x)?),
        Node::Star(a, b) => star(eval(a)?, eval(b)?, pos),
        Node::Add(a, b) => add(eval(a)?, eval(b)?, false, pos),
        Node::Sub(a, b) => add(eval(a)?, eval(b)?, true, pos),
        Node::Call(f, args) => call(*f, args, pos),
    }
}

fn scalar_lit(s: &ScalarLit) -> CoeffElem {
    match s {
        ScalarLit::Number(r) => CoeffElem::from(r.clone()),
        ScalarLit::I => CoeffElem::i(),
        ScalarLit::C0 => CoeffElem::surd(Surd::C0),
        ScalarLit::Y0 => CoeffElem::surd(Surd::Y0),
        ScalarLit::S2 => CoeffElem::surd(Surd::S2),
    }
}

fn type_error(pos: Pos, msg: String) -> LangError {
    LangError::new(ErrorCode::Type, pos, msg)
}

fn scale(s: &CoeffElem, v: Value) -> R {
    Ok(match v {
        Value::Scalar(c) => Value::Scalar(s * &c),
        Value::Coord(x) => Value::Coord(x.scale(s)),
        Value::Octonion(z) => Value::Octonion(z.scale(s)),
        Value::Spinor(z) => Value::Spinor(z.map(|x| x.scale(s))),
        Value::Fermion(f) => Value::Fermion(f.scale(s)),
        Value::BilinearZorn(z) => Value::BilinearZorn(z.map(|x| x.scale(s))),
        Value::Bilinear(b) => Value::Bilinear(b.scale(s)),
        Value::Tuple(items) => Value::Tuple(items.into_iter().map(|v| scale(s, v)).collect::<Result<_, _>>()?),
    })
}

fn to_coord(z: &Zorn<CoeffElem>, pos: Pos) -> Result<OctCoord<CoeffElem>, LangError> {
    OctCoord::from_zorn(z).map_err(|e| LangError::new(ErrorCode::Domain, pos, format!("zorn_to_coord: {e}")))
}

/// `barred` flag shared by every symbol of a spinor; `None` for zero.
fn barring(z: &Zorn<FermionLin>, pos: Pos) -> Result<Option<bool>, LangError> {
    let mut flag = None;
    let entries = [&z.lambda, &z.xi].into_iter().chain(z.a.entries()).chain(z.b.entries());
    for lin in entries {
        for (s, _) in lin.terms() {
            match flag {
                None => flag = Some(s.barred),
                Some(b) if b != s.barred => {
                    return Err(type_error(pos, "spinor mixes barred and unbarred symbols".into()))
                }
                Some(_) => {}
            }
        }
    }
    Ok(flag)
}

fn check_pairing(x: Option<bool>, y: Option<bool>, pos: Pos) -> Result<(), LangError> {
    if let (Some(a), Some(b)) = (x, y) {
        if a == b {
            let which = if a { "barred" } else { "unbarred" };
            return Err(type_error(pos, format!("product of two {which} spinors is not a bilinear")));
        }
    }
    Ok(())
}

fn star(a: Value, b: Value, pos: Pos) -> R {
    use Value::*;
    Ok(match (a, b) {
        (Scalar(s), v) | (v, Scalar(s)) => return scale(&s, v),
        (Coord(x), Coord(y)) => Coord(x.mul(&y)),
        (Coord(x), Octonion(z)) => Coord(x.mul(&to_coord(&z, pos)?)),
        (Octonion(z), Coord(y)) => Coord(to_coord(&z, pos)?.mul(&y)),
        (Octonion(x), Octonion(y)) => Octonion(x.star(&y)),
        (Octonion(z), Spinor(s)) => Spinor(z.star::<FermionLin, FermionLin>(&s)),
        (Spinor(s), Octonion(z)) => Spinor(s.star::<CoeffElem, FermionLin>(&z)),
        (Coord(x), Spinor(s)) => Spinor(x.to_zorn().star::<FermionLin, FermionLin>(&s)),
        (Spinor(s), Coord(x)) => Spinor(s.star::<CoeffElem, FermionLin>(&x.to_zorn())),
        (Spinor(x), Spinor(y)) => {
            check_pairing(barring(&x, pos)?, barring(&y, pos)?, pos)?;
            BilinearZorn(x.star::<FermionLin, BilinearCombo>(&y))
        }
        (Octonion(z), BilinearZorn(w)) => BilinearZorn(z.star::<BilinearCombo, BilinearCombo>(&w)),
        (BilinearZorn(w), Octonion(z)) => BilinearZorn(w.star::<CoeffElem, BilinearCombo>(&z)),
        (Coord(x), BilinearZorn(w)) => BilinearZorn(x.to_zorn().star::<BilinearCombo, BilinearCombo>(&w)),
        (BilinearZorn(w), Coord(x)) => BilinearZorn(w.star::<CoeffElem, BilinearCombo>(&x.to_zorn())),
        (Fermion(x), Fermion(y)) => {
            let flag = |f: &FermionLin| f.terms().next().map(|(s, _)| s.barred);
            let mixed = |f: &FermionLin| f.terms().any(|(s, _)| Some(s.barred) != flag(f));
            if mixed(&x) || mixed(&y) {
                return Err(type_error(pos, "fermion combination mixes barred and unbarred symbols".into()));
            }
            check_pairing(flag(&x), flag(&y), pos)?;
            Bilinear(octoweak_core::algebra::Product::product(&x, &y))
        }
        (a, b) => return Err(type_error(pos, format!("no star product between {} and {}", a.kind(), b.kind()))),
    })
}

fn add(a: Value, b: Value, subtract: bool, pos: Pos) -> R {
    use Value::*;
    macro_rules! op {
        ($x:expr, $y:expr) => {
            if subtract {
                $x.minus($y)
            } else {
                $x.plus($y)
            }
        };
    }
    let unit = |s: &CoeffElem| OctCoord::<CoeffElem>::generator(0).scale(s);
    Ok(match (a, b) {
        (Scalar(x), Scalar(y)) => Scalar(op!(x, &y)),
        (Scalar(s), Octonion(z)) => Octonion(op!(Zorn::identity().scale(&s), &z)),
        (Octonion(z), Scalar(s)) => Octonion(op!(z, &Zorn::identity().scale(&s))),
        (Scalar(s), Coord(x)) => Coord(op!(unit(&s), &x)),
        (Coord(x), Scalar(s)) => Coord(op!(x, &unit(&s))),
        (Coord(x), Coord(y)) => Coord(op!(x, &y)),
        (Coord(x), Octonion(z)) => Coord(op!(x, &to_coord(&z, pos)?)),
        (Octonion(z), Coord(y)) => Coord(op!(to_coord(&z, pos)?, &y)),
        (Octonion(x), Octonion(y)) => Octonion(op!(x, &y)),
        (Spinor(x), Spinor(y)) => Spinor(op!(x, &y)),
        (Fermion(x), Fermion(y)) => Fermion(op!(x, &y)),
        (BilinearZorn(x), BilinearZorn(y)) => BilinearZorn(op!(x, &y)),
        (Bilinear(x), Bilinear(y)) => Bilinear(op!(x, &y)),
        (a, b) => {
            let verb = if subtract { "subtract" } else { "add" };
            return Err(type_error(pos, format!("cannot {verb} {} and {}", a.kind(), b.kind())));
        }
    })
}

fn conj(v: Value, pos: Pos) -> R {
    Ok(match v {
        Value::Scalar(c) => Value::Scalar(c.conj()),
        Value::Coord(x) => Value::Coord(to_coord(&x.to_zorn().conj(), pos)?),
        Value::Octonion(z) => Value::Octonion(z.conj()),
        Value::Spinor(z) => Value::Spinor(z.conj()),
        Value::Fermion(f) => Value::Fermion(f.conjugate()),
        Value::Bilinear(b) => {
            let mut out = BilinearCombo::new();
            for (bl, c) in b.terms() {
                out.add_term(bl.adjoint(), c.conj());
            }
            Value::Bilinear(out)
        }
        other => return Err(type_error(pos, format!("conj is not defined on {}", other.kind()))),
    })
}

fn trace(v: Value, pos: Pos) -> R {
    Ok(match v {
        Value::Coord(x) => Value::Scalar(x.to_zorn().trace()),
        Value::Octonion(z) => Value::Scalar(z.trace()),
        Value::Spinor(z) => Value::Fermion(z.trace()),
        Value::BilinearZorn(z) => Value::Bilinear(z.trace()),
        other => return Err(type_error(pos, format!("tr expects a matrix value, got {}", other.kind()))),
    })
}

fn index_arg(v: &Value, pos: Pos) -> Result<usize, LangError> {
    let k = match v {
        Value::Scalar(c) => c.as_rational().and_then(Rational::to_i64),
        _ => None,
    };
    let k = k.ok_or_else(|| type_error(pos, format!("eps4 expects integer indices, got {}", v.render())))?;
    usize::try_from(k)
        .ok()
        .filter(|k| *k < 8)
        .ok_or_else(|| LangError::new(ErrorCode::Domain, pos, format!("index {k} outside 0..7")))
}

fn positive_arg(v: &Value, name: &str, pos: Pos) -> Result<Rational, LangError> {
    let r = match v {
        Value::Scalar(c) => c.as_rational().cloned(),
        _ => None,
    };
    let r = r.ok_or_else(|| type_error(pos, format!("Psi0 expects a rational {name}, got {}", v.render())))?;
    if !r.is_positive() {
        return Err(LangError::new(ErrorCode::Domain, pos, format!("Psi0 needs {name} > 0, got {r}")));
    }
    Ok(r)
}

fn call(f: Func, args: &[Expr], pos: Pos) -> R {
    let vals: Vec<Value> = args.iter().map(eval).collect::<Result<_, _>>()?;
    let arg_pos = |k: usize| args[k].pos;
    match f {
        Func::Conj => conj(vals.into_iter().next().expect("arity checked"), pos),
        Func::Tr => trace(vals.into_iter().next().expect("arity checked"), pos),
        Func::Norm2 => {
            let v = vals.into_iter().next().expect("arity checked");
            if matches!(v, Value::Scalar(_) | Value::Tuple(_) | Value::Bilinear(_) | Value::BilinearZorn(_)) {
                return Err(type_error(pos, format!("norm2 is not defined on {}", v.kind())));
            }
            let c = conj(v.clone(), pos)?;
            trace(star(c, v, pos)?, pos)
        }
        Func::Assoc | Func::Split3 => {
            let [a, b, c]: [Value; 3] = vals.try_into().expect("arity checked");
            let left = star(star(a.clone(), b.clone(), pos)?, c.clone(), pos)?;
            let right = star(a, star(b, c, pos)?, pos)?;
            if f == Func::Assoc {
                return add(left, right, true, pos);
            }
            let half = CoeffElem::frac(1, 2);
            let sum = scale(&half, add(left.clone(), right.clone(), false, pos)?)?;
            let diff = scale(&half, add(left, right, true, pos)?)?;
            Ok(Value::Tuple(vec![sum, diff]))
        }
        Func::Eps4 => {
            let idx: Vec<usize> =
                vals.iter().enumerate().map(|(k, v)| index_arg(v, arg_pos(k))).collect::<Result<_, _>>()?;
            let t = quad_trace(idx[0], idx[1], idx[2], idx[3]).expect("indices validated");
            Ok(Value::Scalar(CoeffElem::from(t)))
        }
        Func::Psi0 => {
            let m = positive_arg(&vals[0], "m", arg_pos(0))?;
            let fv = positive_arg(&vals[1], "f", arg_pos(1))?;
            let p = FieldParams::new(m, fv).map_err(|e| LangError::new(ErrorCode::Domain, pos, e.to_string()))?;
            let z = vacuum_state(&p).map_err(|e| LangError::new(ErrorCode::Domain, pos, e.to_string()))?;
            Ok(Value::Octonion(z))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(src: &str) -> String {
        eval_str(src).unwrap().render()
    }

    fn code(src: &str) -> ErrorCode {
        eval_str(src).unwrap_err().code
    }

    #[test]
    fn sigma_products() {
        assert_eq!(text("(S1*S2)"), "iΣ³");
        assert_eq!(text("S2*S1"), "-iΣ³");
        assert_eq!(text("S3*S3"), "Σ⁰");
        assert_eq!(text("2*S1*S4"), "2i·Σ⁵");
    }

    #[test]
    fn coordinates() {
        assert_eq!(text("e1*e2"), "e³");
        assert_eq!(text("e4*e5"), "e¹");
        assert_eq!(text("conj(e1 + 2*e0)"), "2·e⁰ - e¹");
        assert_eq!(text("e1*S2"), "ie³");
    }

    #[test]
    fn scalars_and_functions() {
        assert_eq!(text("c0*c0"), "32/257");
        assert_eq!(text("norm2(Psi0(1,2))"), "1");
        assert_eq!(text("tr(S0)"), "4");
        assert_eq!(text("eps4(1,2,4,7)"), "16");
        assert_eq!(text("assoc(S1, S1, S4)"), "0");
        assert_eq!(text("split3(S1, S2, S3)"), "(iΣ⁰, 0)");
    }

    #[test]
    fn currents() {
        assert_eq!(text("tr(Lbar*(S7*L))"), "0");
        assert_eq!(text("tr(conj(L)*(S3*L))"), text("tr((Lbar*S3)*L)"));
    }

    #[test]
    fn type_and_domain_errors() {
        let e = eval_str("1 + tr(2)").unwrap_err();
        assert_eq!((e.code, e.pos), (ErrorCode::Type, Pos { line: 1, col: 5 }));
        assert_eq!(code("L*L"), ErrorCode::Type);
        assert_eq!(code("S1 + L"), ErrorCode::Type);
        assert_eq!(code("eps4(1,2,4,8)"), ErrorCode::Domain);
        assert_eq!(code("eps4(1,2,4,i)"), ErrorCode::Type);
        assert_eq!(code("Psi0(0, 1)"), ErrorCode::Domain);
        assert_eq!(code("Psi0(1, 3)"), ErrorCode::Domain);
    }
}
