use num_traits::Zero;

use super::lexer::{tokenize, Tok};
use super::{BinOp, Expr, Func, ParseError, Pos};
use crate::series::Rational;

const MAX_DEPTH: usize = 200;

/// Parse one expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0, depth: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::Eof => Ok(e),
        t => Err(p.error(format!("expected end of input, found {}", t.describe()))),
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, msg: String) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply".into()));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            t => Err(self.error(format!("expected an integer, found {}", t.describe()))),
        }
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        match self.peek() {
            Tok::Int(_) => Ok(Rational::from_integer(self.int()?)),
            Tok::Minus => {
                self.bump();
                Ok(Rational::from_integer(-self.int()?))
            }
            Tok::LParen => {
                self.bump();
                let sign = if *self.peek() == Tok::Minus {
                    self.bump();
                    -1
                } else {
                    1
                };
                let num = self.int()?;
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: "zero denominator in exponent".into(),
                        });
                    }
                    d
                } else {
                    1
                };
                self.expect(Tok::RParen)?;
                Ok(Rational::new(sign * num, den))
            }
            t => Err(self.error(format!(
                "exponent must be an integer or a parenthesized fraction, found {}",
                t.describe()
            ))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    self.call(name, pos)
                } else {
                    Ok(match name.as_str() {
                        "q" => Expr::Q,
                        "inf" => Expr::Inf,
                        _ => Expr::Sym(name),
                    })
                }
            }
            t => Err(ParseError::Syntax {
                pos,
                msg: format!("expected an expression, found {}", t.describe()),
            }),
        }
    }

    fn call(&mut self, name: String, pos: Pos) -> Result<Expr, ParseError> {
        let func = Func::from_name(&name).ok_or_else(|| ParseError::UnknownFunction {
            pos,
            name: name.clone(),
        })?;
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                args.push(self.expr()?);
                if *self.peek() == Tok::Sep {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        let (lo, hi) = func.arity();
        if args.len() < lo || args.len() > hi {
            let expected = if lo == hi {
                lo.to_string()
            } else {
                format!("{lo} to {hi}")
            };
            return Err(ParseError::Arity {
                pos,
                name,
                expected,
                got: args.len(),
            });
        }
        Ok(Expr::Call(func, args))
    }
}
