use super::ast::{Expr, Func, Lepton, Node, ScalarLit};
use super::lexer::{tokenize, Tok, Token};
use super::{ErrorCode, LangError, Pos};

pub fn parse(src: &str) -> Result<Expr, LangError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, at: 0 };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(LangError::new(ErrorCode::Syntax, t.pos, format!("unexpected {}", t.tok.describe())));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

enum Atom {
    Scalar(ScalarLit),
    Other(Node),
    Func(Func),
}

fn classify(name: &str) -> Option<Atom> {
    let indexed = |prefix: char| {
        let mut it = name.chars();
        (it.next() == Some(prefix))
            .then_some(it.as_str())
            .filter(|rest| rest.len() == 1)
            .and_then(|rest| rest.parse::<usize>().ok())
            .filter(|k| *k < 8)
    };
    if let Some(k) = indexed('e') {
        return Some(Atom::Other(Node::Coord(k)));
    }
    if let Some(k) = indexed('S') {
        return Some(Atom::Other(Node::Sigma(k)));
    }
    if let Some(f) = Func::from_name(name) {
        return Some(Atom::Func(f));
    }
    Some(match name {
        "L" => Atom::Other(Node::Lepton(Lepton::L)),
        "Lbar" => Atom::Other(Node::Lepton(Lepton::Lbar)),
        "i" => Atom::Scalar(ScalarLit::I),
        "c0" => Atom::Scalar(ScalarLit::C0),
        "y0" => Atom::Scalar(ScalarLit::Y0),
        "s2" => Atom::Scalar(ScalarLit::S2),
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, LangError> {
        let t = self.next();
        if t.tok == want {
            Ok(t.pos)
        } else {
            Err(LangError::new(
                ErrorCode::Syntax,
                t.pos,
                format!("expected {}, found {}", want.describe(), t.tok.describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.term()?;
        loop {
            let t = self.peek().clone();
            let ctor: fn(Box<Expr>, Box<Expr>) -> Node = match t.tok {
                Tok::Plus => Node::Add,
                Tok::Minus => Node::Sub,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.term()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), t.pos);
        }
    }

    fn term(&mut self) -> Result<Expr, LangError> {
        let lhs = self.factor()?;
        if self.peek().tok != Tok::Star {
            return Ok(lhs);
        }
        let star = self.next();
        let rhs = self.factor()?;
        let t = self.peek();
        if t.tok == Tok::Star {
            return Err(LangError::new(
                ErrorCode::ChainStar,
                t.pos,
                "chained star product; parenthesize to fix the association order",
            ));
        }
        Ok(Expr::new(Node::Star(Box::new(lhs), Box::new(rhs)), star.pos))
    }

    fn factor(&mut self) -> Result<Expr, LangError> {
        let t = self.next();
        let pos = t.pos;
        let scalar = match t.tok {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::Number(r) => ScalarLit::Number(r),
            Tok::Minus => match self.next() {
                Token { tok: Tok::Number(r), .. } => ScalarLit::Number(-r),
                other => {
                    return Err(LangError::new(
                        ErrorCode::Syntax,
                        other.pos,
                        format!("`-` must precede a number here, found {}", other.tok.describe()),
                    ))
                }
            },
            Tok::Ident(name) => match classify(&name) {
                None => {
                    return Err(LangError::new(ErrorCode::UnknownIdent, pos, format!("unknown identifier `{name}`")))
                }
                Some(Atom::Other(node)) => return Ok(Expr::new(node, pos)),
                Some(Atom::Func(f)) => return self.call(f, pos),
                Some(Atom::Scalar(s)) => s,
            },
            other => {
                return Err(LangError::new(ErrorCode::Syntax, pos, format!("expected an operand, found {}", other.describe())))
            }
        };
        // `scalar '*' factor` binds before the term-level star.
        if self.peek().tok == Tok::Star {
            self.next();
            let rhs = self.factor()?;
            return Ok(Expr::new(Node::ScalarMul(scalar, Box::new(rhs)), pos));
        }
        Ok(Expr::new(Node::Scalar(scalar), pos))
    }

    fn call(&mut self, f: Func, pos: Pos) -> Result<Expr, LangError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                args.push(self.expr()?);
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        if args.len() != f.arity() {
            return Err(LangError::new(
                ErrorCode::Arity,
                pos,
                format!("`{}` takes {} argument(s), got {}", f.name(), f.arity(), args.len()),
            ));
        }
        Ok(Expr::new(Node::Call(f, args), pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(a: Node, b: Node) -> Node {
        Node::Star(Box::new(Expr::new(a, Pos::default())), Box::new(Expr::new(b, Pos::default())))
    }

    fn call(f: Func, args: Vec<Node>) -> Node {
        Node::Call(f, args.into_iter().map(|n| Expr::new(n, Pos::default())).collect())
    }

    #[test]
    fn star_of_generators() {
        assert_eq!(parse("(S1*S2)").unwrap().node, star(Node::Sigma(1), Node::Sigma(2)));
    }

    #[test]
    fn nested_call_tree() {
        let l = || Node::Lepton(Lepton::L);
        let expected = call(Func::Tr, vec![star(call(Func::Conj, vec![l()]), star(Node::Sigma(3), l()))]);
        assert_eq!(parse("tr(conj(L)*(S3*L))").unwrap().node, expected);
    }

    #[test]
    fn chain_star_rejected_with_position() {
        let e = parse("S1*S2*S3").unwrap_err();
        assert_eq!(e.code, ErrorCode::ChainStar);
        assert_eq!(e.pos, Pos { line: 1, col: 6 });
    }

    #[test]
    fn scalar_prefix_binds_tighter() {
        let e = parse("2*S1*S2").unwrap();
        assert!(matches!(e.node, Node::Star(ref a, _) if matches!(a.node, Node::ScalarMul(..))));
        assert_eq!(parse("c0*c0").unwrap().render(), "c0*c0");
    }

    #[test]
    fn arity_and_unknown_identifiers() {
        let e = parse("tr(S1, S2)").unwrap_err();
        assert_eq!((e.code, e.pos), (ErrorCode::Arity, Pos { line: 1, col: 1 }));
        let e = parse("S1 + e8").unwrap_err();
        assert_eq!((e.code, e.pos), (ErrorCode::UnknownIdent, Pos { line: 1, col: 6 }));
        assert_eq!(parse("foo(1)").unwrap_err().code, ErrorCode::UnknownIdent);
        assert_eq!(parse("Psi0(1)").unwrap_err().code, ErrorCode::Arity);
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse("(S1*S2").unwrap_err().code, ErrorCode::Syntax);
        assert_eq!(parse("S1 S2").unwrap_err().code, ErrorCode::Syntax);
        assert_eq!(parse("").unwrap_err().code, ErrorCode::Syntax);
        assert_eq!(parse("-S1").unwrap_err().code, ErrorCode::Syntax);
    }

    #[test]
    fn render_is_a_fixed_point() {
        for src in [
            "S1*S2",
            "2*S1*S2",
            "S1*2*(S2*S3)",
            "(S1 + S2)*S3",
            "e1 - (e2 - e3)",
            "-3/2*S4 + 0.25*i*S5",
            "split3(S1, S2, S4)",
            "tr(Lbar*(S3*L))",
        ] {
            let first = parse(src).unwrap();
            let text = first.render();
            let second = parse(&text).unwrap();
            assert_eq!(first, second, "{src}");
            assert_eq!(text, second.render(), "{src}");
        }
    }
}
