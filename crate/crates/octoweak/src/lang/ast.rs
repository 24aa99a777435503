use std::fmt;

use octoweak_core::scalar::Rational;

use super::Pos;

#[derive(Clone, PartialEq, Debug)]
pub enum ScalarLit {
    Number(Rational),
    I,
    C0,
    Y0,
    S2,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lepton {
    L,
    Lbar,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Func {
    Conj,
    Tr,
    Norm2,
    Assoc,
    Split3,
    Eps4,
    Psi0,
}

impl Func {
    pub const ALL: [Func; 7] = [Func::Conj, Func::Tr, Func::Norm2, Func::Assoc, Func::Split3, Func::Eps4, Func::Psi0];

    pub fn name(self) -> &'static str {
        match self {
            Func::Conj => "conj",
            Func::Tr => "tr",
            Func::Norm2 => "norm2",
            Func::Assoc => "assoc",
            Func::Split3 => "split3",
            Func::Eps4 => "eps4",
            Func::Psi0 => "Psi0",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Conj | Func::Tr | Func::Norm2 => 1,
            Func::Psi0 => 2,
            Func::Assoc | Func::Split3 => 3,
            Func::Eps4 => 4,
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Node {
    /// `e0..e7`
    Coord(usize),
    /// `S0..S7`
    Sigma(usize),
    Lepton(Lepton),
    Scalar(ScalarLit),
    Star(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    ScalarMul(ScalarLit, Box<Expr>),
    Call(Func, Vec<Expr>),
}

/// A node and the position of the token that introduced it.
#[derive(Clone, Debug)]
pub struct Expr {
    pub node: Node,
    pub pos: Pos,
}

/// Structural equality; positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Expr {
    pub fn new(node: Node, pos: Pos) -> Self {
        Expr { node, pos }
    }

    fn is_sum(&self) -> bool {
        matches!(self.node, Node::Add(..) | Node::Sub(..))
    }

    /// Canonical source text. Every star product is parenthesized, so the
    /// output always reparses to the same tree.
    pub fn render(&self) -> String {
        let wrap = |e: &Expr| if e.is_sum() { format!("({})", e.render()) } else { e.render() };
        match &self.node {
            Node::Coord(k) => format!("e{k}"),
            Node::Sigma(k) => format!("S{k}"),
            Node::Lepton(Lepton::L) => "L".into(),
            Node::Lepton(Lepton::Lbar) => "Lbar".into(),
            Node::Scalar(s) => s.to_string(),
            Node::Star(a, b) => format!("({}*{})", wrap(a), wrap(b)),
            Node::Add(a, b) => format!("{} + {}", a.render(), wrap(b)),
            Node::Sub(a, b) => format!("{} - {}", a.render(), wrap(b)),
            Node::ScalarMul(s, x) => format!("{}*{}", s, wrap(x)),
            Node::Call(f, args) => {
                let args: Vec<String> = args.iter().map(Expr::render).collect();
                format!("{}({})", f.name(), args.join(", "))
            }
        }
    }
}

impl fmt::Display for ScalarLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarLit::Number(r) => write!(f, "{r}"),
            ScalarLit::I => f.write_str("i"),
            ScalarLit::C0 => f.write_str("c0"),
            ScalarLit::Y0 => f.write_str("y0"),
            ScalarLit::S2 => f.write_str("s2"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
