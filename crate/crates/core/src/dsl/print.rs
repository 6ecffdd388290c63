use std::fmt;

use num_traits::Zero;

use super::{BinOp, Expr, Func};
use crate::series::Rational;

// binding strength: sum < product < unary < power < atom
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn strength(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => SUM,
        Expr::Bin(BinOp::Mul | BinOp::Div, ..) => PRODUCT,
        Expr::Neg(_) => UNARY,
        Expr::Pow(..) => POWER,
        _ => ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if strength(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, r: Rational) -> fmt::Result {
    if r.is_integer() && r >= Rational::zero() {
        write!(f, "{}", r.numer())
    } else if r.is_integer() {
        write!(f, "({})", r.numer())
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

/// Canonical text; parsing it back yields the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => write!(f, "q"),
            Expr::Inf => write!(f, "inf"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_at(f, e, UNARY)
            }
            Expr::Bin(op, a, b) => {
                let (level, sym) = match op {
                    BinOp::Add => (SUM, " + "),
                    BinOp::Sub => (SUM, " - "),
                    BinOp::Mul => (PRODUCT, "*"),
                    BinOp::Div => (PRODUCT, "/"),
                };
                write_at(f, a, level)?;
                write!(f, "{sym}")?;
                write_at(f, b, level + 1)
            }
            Expr::Pow(base, r) => {
                write_at(f, base, ATOM)?;
                write!(f, "^")?;
                write_exponent(f, *r)
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        let sep = match (func, i) {
                            (Func::J | Func::JProd | Func::Poch, 1) => "; ",
                            _ => ", ",
                        };
                        write!(f, "{sep}")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}
