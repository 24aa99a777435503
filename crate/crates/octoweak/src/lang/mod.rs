//! The expression language: lexer, parser, canonical renderer and evaluator.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor | factor '*' factor
//! factor := atom | scalar '*' factor | func '(' args ')' | '(' expr ')'
//! ```
//!
//! A second `*` after `factor '*' factor` is rejected: star products must be
//! parenthesized explicitly.

mod ast;
mod eval;
mod lexer;
mod parser;
mod value;

use std::fmt;

pub use ast::{Expr, Func, Lepton, Node, ScalarLit};
pub use eval::{eval, eval_str};
pub use lexer::{tokenize, Tok, Token};
pub use parser::parse;
pub use value::Value;

/// 1-based source position.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ErrorCode {
    ChainStar,
    UnknownIdent,
    Arity,
    Syntax,
    Type,
    Domain,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::ChainStar => "E_CHAIN_STAR",
            ErrorCode::UnknownIdent => "E_UNKNOWN_IDENT",
            ErrorCode::Arity => "E_ARITY",
            ErrorCode::Syntax => "E_SYNTAX",
            ErrorCode::Type => "E_TYPE",
            ErrorCode::Domain => "E_DOMAIN",
        }
    }

    /// Parse-stage errors, as opposed to evaluation errors.
    pub fn is_parse(self) -> bool {
        !matches!(self, ErrorCode::Type | ErrorCode::Domain)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LangError {
    pub code: ErrorCode,
    pub pos: Pos,
    pub message: String,
}

impl LangError {
    pub fn new(code: ErrorCode, pos: Pos, message: impl Into<String>) -> Self {
        LangError { code, pos, message: message.into() }
    }
}

impl fmt::Display for LangError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code.as_str(), self.pos, self.message)
    }
}

impl std::error::Error for LangError {}
