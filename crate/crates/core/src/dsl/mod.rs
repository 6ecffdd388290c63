//! A small expression language for q-series identities.
//!
//! ```text
//! 2*m(q, q^3, -1) - phi()
//! J(1,2)^2 / (2*j(x; q))
//! poch(-q; q^2, inf)^2 * poch(q^6, q^6, inf)
//! ```
//!
//! Precedence from tightest: `^`, unary `-`, `* /`, `+ -`. Exponents are
//! integer or parenthesized rational literals. Multiplication is always
//! explicit. `;` and `,` both separate arguments.

mod eval;
mod lexer;
mod parser;
mod print;

use std::fmt;

use thiserror::Error;

use crate::series::{Rational, SeriesError};
use crate::special::QError;

pub use eval::{eval, eval_monomial, Binding, Value};
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Named functions of the language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    /// `j(x; q^p)`, sum form.
    J,
    /// `jprod(x; q^p)`, product form.
    JProd,
    /// `J(a, m)`.
    JAm,
    /// `JB(a, m)`.
    JBar,
    /// `Jm(m)`.
    JSingle,
    Poch,
    M,
    MChange,
    MSplit,
    G,
    GFirst,
    GAppell,
    Lambert,
    Phi,
    Sigma,
    F3,
    F0,
    Kp,
    Kpp,
    Hp,
    Ktilde,
    Htilde,
    Habc,
    Rln2,
    Rln4,
    SinPi,
    CscPi,
    Zeta,
}

impl Func {
    pub const ALL: [Func; 28] = [
        Func::J,
        Func::JProd,
        Func::JAm,
        Func::JBar,
        Func::JSingle,
        Func::Poch,
        Func::M,
        Func::MChange,
        Func::MSplit,
        Func::G,
        Func::GFirst,
        Func::GAppell,
        Func::Lambert,
        Func::Phi,
        Func::Sigma,
        Func::F3,
        Func::F0,
        Func::Kp,
        Func::Kpp,
        Func::Hp,
        Func::Ktilde,
        Func::Htilde,
        Func::Habc,
        Func::Rln2,
        Func::Rln4,
        Func::SinPi,
        Func::CscPi,
        Func::Zeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::J => "j",
            Func::JProd => "jprod",
            Func::JAm => "J",
            Func::JBar => "JB",
            Func::JSingle => "Jm",
            Func::Poch => "poch",
            Func::M => "m",
            Func::MChange => "mchange",
            Func::MSplit => "msplit",
            Func::G => "g",
            Func::GFirst => "gfirst",
            Func::GAppell => "gappell",
            Func::Lambert => "lambert",
            Func::Phi => "phi",
            Func::Sigma => "sigma",
            Func::F3 => "f3",
            Func::F0 => "f0",
            Func::Kp => "Kp",
            Func::Kpp => "Kpp",
            Func::Hp => "Hp",
            Func::Ktilde => "Ktilde",
            Func::Htilde => "Htilde",
            Func::Habc => "Habc",
            Func::Rln2 => "rln2",
            Func::Rln4 => "rln4",
            Func::SinPi => "sinpi",
            Func::CscPi => "cscpi",
            Func::Zeta => "zeta",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Allowed argument counts, inclusive.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Func::J | Func::JProd | Func::G | Func::GFirst | Func::GAppell => (1, 2),
            Func::JAm | Func::JBar | Func::SinPi | Func::CscPi | Func::Zeta => (2, 2),
            Func::JSingle | Func::Kp | Func::Kpp | Func::Rln2 | Func::Rln4 => (1, 1),
            Func::Poch | Func::M | Func::Hp | Func::Habc => (3, 3),
            Func::MChange => (3, 4),
            Func::MSplit => (5, 5),
            Func::Lambert => (4, 4),
            Func::Phi | Func::Sigma | Func::F3 | Func::F0 => (0, 1),
            Func::Ktilde | Func::Htilde => (2, 2),
        }
    }
}

/// Abstract syntax tree. Parenthesization is not recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Q,
    Inf,
    Sym(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
    Call(Func, Vec<Expr>),
}

impl Expr {
    /// Free symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        match self {
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(e) | Expr::Pow(e, _) => e.collect_symbols(out),
            Expr::Bin(_, a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_symbols(out)),
            Expr::Int(_) | Expr::Q | Expr::Inf => {}
        }
    }
}

/// Source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: unknown function `{name}`")]
    UnknownFunction { pos: Pos, name: String },
    #[error("{pos}: `{name}` takes {expected} arguments, got {got}")]
    Arity {
        pos: Pos,
        name: String,
        expected: String,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound symbol `{0}`")]
    Unbound(String),
    #[error("{0}")]
    Type(String),
    #[error("in {at}: {source}")]
    At {
        at: String,
        #[source]
        source: QError,
    },
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl EvalError {
    pub fn is_nongeneric(&self) -> bool {
        match self {
            EvalError::At { source, .. } | EvalError::Q(source) => source.is_nongeneric(),
            EvalError::Series(e) => QError::Series(e.clone()).is_nongeneric(),
            _ => false,
        }
    }

    pub fn is_precision(&self) -> bool {
        matches!(
            self,
            EvalError::At {
                source: QError::Precision { .. },
                ..
            } | EvalError::Q(QError::Precision { .. })
        )
    }
}
