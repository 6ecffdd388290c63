use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BinOp, EvalError, Expr, Func};
use crate::coeff::{csc_pi, sin_pi, CycloNumber};
use crate::eulerian::{self, HRoute};
use crate::series::{Monomial, QSeries, Rational};
use crate::special::{
    appell_m, deepen, g_appell, g_first_form, g_universal, j_m, lambert_bilateral,
    m_change_z_correction, msplit, pochhammer, theta_J, theta_j, theta_product, PochLength,
    QError, ThetaSpec,
};

/// Values assigned to free symbols.
pub type Binding = BTreeMap<String, Monomial>;

/// An evaluated subexpression: monomials are kept exact so that they can be
/// used as arguments.
#[derive(Debug, Clone)]
pub enum Value {
    Mono(Monomial),
    Series(QSeries),
}

impl Value {
    fn into_series(self, order: Rational) -> QSeries {
        match self {
            Value::Mono(m) => QSeries::from_monomial(&m, order),
            Value::Series(s) => s,
        }
    }
}

/// Evaluate `e` to a series known to order `q^order`.
pub fn eval(e: &Expr, binding: &Binding, order: Rational) -> Result<QSeries, EvalError> {
    let ev = Evaluator { binding };
    let mut last: Option<EvalError> = None;
    let result = deepen(order, |w| match ev.value(e, w) {
        Ok(v) => Ok(v.into_series(w)),
        Err(err) => {
            let q = match &err {
                EvalError::At { source, .. } => source.clone(),
                EvalError::Q(q) => q.clone(),
                _ => QError::InvalidParameters(err.to_string()),
            };
            last = Some(err);
            Err(q)
        }
    });
    match (result, last) {
        (Ok(s), _) => Ok(s),
        (Err(_), Some(err)) => Err(err),
        (Err(q), None) => Err(EvalError::Q(q)),
    }
}

/// Evaluate an expression that must reduce to a single monomial, such as a
/// binding value `-zeta(3,1)*q^(1/2)`.
pub fn eval_monomial(e: &Expr, binding: &Binding) -> Result<Monomial, EvalError> {
    match (Evaluator { binding }).value(e, Rational::one())? {
        Value::Mono(m) => Ok(m),
        Value::Series(_) => Err(EvalError::Type(format!("`{e}` is not a monomial"))),
    }
}

/// Attach the failing subexpression to an error that does not have one yet.
fn located(e: &Expr, err: EvalError) -> EvalError {
    match err {
        EvalError::Q(source) => EvalError::At {
            at: e.to_string(),
            source,
        },
        EvalError::Series(s) => EvalError::At {
            at: e.to_string(),
            source: QError::Series(s),
        },
        other => other,
    }
}

struct Evaluator<'a> {
    binding: &'a Binding,
}

impl Evaluator<'_> {
    fn value(&self, e: &Expr, w: Rational) -> Result<Value, EvalError> {
        Ok(match e {
            Expr::Int(0) => Value::Series(QSeries::zero(w)),
            Expr::Int(n) => Value::Mono(Monomial::int(*n)),
            Expr::Q => Value::Mono(Monomial::q_int(1)),
            Expr::Inf => return Err(EvalError::Type("`inf` is only allowed as a length".into())),
            Expr::Sym(s) => Value::Mono(
                self.binding
                    .get(s)
                    .cloned()
                    .ok_or_else(|| EvalError::Unbound(s.clone()))?,
            ),
            Expr::Neg(a) => match self.value(a, w)? {
                Value::Mono(m) => Value::Mono(m.neg()),
                Value::Series(s) => Value::Series(s.neg()),
            },
            Expr::Bin(op, a, b) => self.binary(*op, a, b, w).map_err(|err| located(e, err))?,
            Expr::Pow(a, r) => self.power(a, *r, w).map_err(|err| located(e, err))?,
            Expr::Call(func, args) => self.call(*func, args, w).map_err(|err| located(e, err))?,
        })
    }

    fn binary(&self, op: BinOp, a: &Expr, b: &Expr, w: Rational) -> Result<Value, EvalError> {
        let x = self.value(a, w)?;
        let y = self.value(b, w)?;
        Ok(match (op, x, y) {
            (BinOp::Add | BinOp::Sub, Value::Mono(m), Value::Mono(n)) if m.expo() == n.expo() => {
                let c = if op == BinOp::Add {
                    m.coeff() + n.coeff()
                } else {
                    m.coeff() - n.coeff()
                };
                match Monomial::new(c, m.expo()) {
                    Ok(r) => Value::Mono(r),
                    Err(_) => Value::Series(QSeries::zero(w)),
                }
            }
            (BinOp::Add, x, y) => Value::Series(x.into_series(w).add(&y.into_series(w))),
            (BinOp::Sub, x, y) => Value::Series(x.into_series(w).sub(&y.into_series(w))),
            (BinOp::Mul, Value::Mono(m), Value::Mono(n)) => Value::Mono(m.mul(&n)),
            (BinOp::Mul, Value::Mono(m), Value::Series(s)) | (BinOp::Mul, Value::Series(s), Value::Mono(m)) => {
                Value::Series(s.shift(&m))
            }
            (BinOp::Mul, Value::Series(s), Value::Series(t)) => Value::Series(s.mul(&t)),
            (BinOp::Div, Value::Mono(m), Value::Mono(n)) => Value::Mono(m.div(&n)),
            (BinOp::Div, Value::Series(s), Value::Mono(n)) => Value::Series(s.shift(&n.inv())),
            (BinOp::Div, Value::Mono(m), Value::Series(t)) => {
                Value::Series(t.invert(w - m.expo())?.shift(&m))
            }
            (BinOp::Div, Value::Series(s), Value::Series(t)) => Value::Series(s.div(&t, w)?),
        })
    }

    fn power(&self, a: &Expr, r: Rational, w: Rational) -> Result<Value, EvalError> {
        match self.value(a, w)? {
            Value::Mono(m) => Ok(Value::Mono(m.pow_rational(r)?)),
            Value::Series(s) => {
                if !r.is_integer() {
                    return Err(EvalError::Type(format!(
                        "fractional power {r} of a series `{a}`"
                    )));
                }
                let k = r.to_integer();
                let s = if k < 0 { s.invert(w)? } else { s };
                Ok(Value::Series(s.pow(k.abs(), w)?))
            }
        }
    }

    fn mono(&self, e: &Expr, w: Rational) -> Result<Monomial, EvalError> {
        match self.value(e, w)? {
            Value::Mono(m) => Ok(m),
            Value::Series(_) => Err(EvalError::Type(format!(
                "argument `{e}` must be a monomial"
            ))),
        }
    }

    fn int(&self, e: &Expr) -> Result<i64, EvalError> {
        match e {
            Expr::Int(n) => Ok(*n),
            Expr::Neg(inner) => match inner.as_ref() {
                Expr::Int(n) => Ok(-n),
                _ => Err(EvalError::Type(format!("argument `{e}` must be an integer"))),
            },
            _ => Err(EvalError::Type(format!("argument `{e}` must be an integer"))),
        }
    }

    /// An integer or a literal `k/2`.
    fn half_int(&self, e: &Expr) -> Result<Rational, EvalError> {
        match e {
            Expr::Bin(BinOp::Div, k, two) if **two == Expr::Int(2) => Ok(Rational::new(self.int(k)?, 2)),
            _ => Ok(Rational::from_integer(self.int(e)?)),
        }
    }

    fn positive(&self, e: &Expr) -> Result<i64, EvalError> {
        let n = self.int(e)?;
        if n < 1 {
            return Err(EvalError::Type(format!("argument `{e}` must be positive")));
        }
        Ok(n)
    }

    /// A base `q^p` with `p > 0`.
    fn base(&self, e: &Expr, w: Rational) -> Result<Rational, EvalError> {
        let m = self.mono(e, w)?;
        if !m.coeff().is_one() || m.expo() <= Rational::zero() {
            return Err(EvalError::Type(format!(
                "base `{e}` must be q^p with p > 0"
            )));
        }
        Ok(m.expo())
    }

    fn opt_base(&self, args: &[Expr], i: usize, w: Rational) -> Result<Rational, EvalError> {
        match args.get(i) {
            Some(e) => self.base(e, w),
            None => Ok(Rational::one()),
        }
    }

    fn call(&self, func: Func, args: &[Expr], w: Rational) -> Result<Value, EvalError> {
        let s = match func {
            Func::J => theta_j(&self.mono(&args[0], w)?, self.opt_base(args, 1, w)?, w),
            Func::JProd => theta_product(&self.mono(&args[0], w)?, self.opt_base(args, 1, w)?, w),
            Func::JAm | Func::JBar => {
                let a = self.int(&args[0])?;
                let m = self.positive(&args[1])?;
                let spec = if func == Func::JAm {
                    ThetaSpec::plain(a, m)
                } else {
                    ThetaSpec::barred(a, m)
                };
                theta_J(spec, w)
            }
            Func::JSingle => j_m(self.positive(&args[0])?, w),
            Func::Poch => {
                let x = self.mono(&args[0], w)?;
                let p = self.base(&args[1], w)?;
                let n = match &args[2] {
                    Expr::Inf => PochLength::Infinite,
                    e => {
                        let n = self.int(e)?;
                        if n < 0 {
                            return Err(EvalError::Type(format!("length `{e}` must be nonnegative")));
                        }
                        PochLength::Finite(n as u64)
                    }
                };
                pochhammer(&x, p, n, w)
            }
            Func::M => {
                let x = self.mono(&args[0], w)?;
                let p = self.base(&args[1], w)?;
                let z = self.mono(&args[2], w)?;
                appell_m(&x, p, &z, w)?
            }
            Func::MChange => {
                let x = self.mono(&args[0], w)?;
                let z0 = self.mono(&args[1], w)?;
                let z1 = self.mono(&args[2], w)?;
                m_change_z_correction(&x, &z0, &z1, self.opt_base(args, 3, w)?, w)?
            }
            Func::MSplit => {
                let x = self.mono(&args[0], w)?;
                let p = self.base(&args[1], w)?;
                let z = self.mono(&args[2], w)?;
                let zp = self.mono(&args[3], w)?;
                msplit(&x, p, &z, &zp, self.positive(&args[4])?, w)?
            }
            Func::G | Func::GFirst | Func::GAppell => {
                let x = self.mono(&args[0], w)?;
                let p = self.opt_base(args, 1, w)?;
                match func {
                    Func::G => g_universal(&x, p, w)?,
                    Func::GFirst => g_first_form(&x, p, w)?,
                    _ => g_appell(&x, p, w)?,
                }
            }
            Func::Lambert => {
                let s = self.mono(&args[0], w)?;
                let a = self.base(&args[1], w)?;
                let u = self.mono(&args[2], w)?;
                let f = self.mono(&args[3], w)?;
                if !f.coeff().is_one() {
                    return Err(EvalError::Type(format!("step `{}` must be q^f", args[3])));
                }
                lambert_bilateral(&s, a, &u, f.expo(), w)?
            }
            Func::Phi => eulerian::phi6(self.opt_base(args, 0, w)?, w)?,
            Func::Sigma => eulerian::sigma6(self.opt_base(args, 0, w)?, w)?,
            Func::F3 => eulerian::f3(self.opt_base(args, 0, w)?, w)?,
            Func::F0 => eulerian::f0(self.opt_base(args, 0, w)?, w)?,
            Func::Kp => eulerian::k_prime(&self.mono(&args[0], w)?, w)?,
            Func::Kpp => eulerian::k_double_prime(&self.mono(&args[0], w)?, w)?,
            Func::Hp => {
                let a = self.int(&args[0])?;
                let c = self.int(&args[1])?;
                eulerian::h_prime(a, c, &self.mono(&args[2], w)?, w)?
            }
            Func::Ktilde => eulerian::k_tilde(self.int(&args[0])?, self.int(&args[1])?, w)?,
            Func::Htilde => {
                eulerian::h_tilde(self.int(&args[0])?, self.int(&args[1])?, HRoute::HPrime, w)?
            }
            Func::Habc => {
                let (a, b, c) = (self.int(&args[0])?, self.half_int(&args[1])?, self.int(&args[2])?);
                eulerian::h_abc(a, b, c, w)?
            }
            Func::Rln2 => eulerian::rln2_lhs(&self.mono(&args[0], w)?, w)?,
            Func::Rln4 => eulerian::rln4_lhs(&self.mono(&args[0], w)?, w)?,
            Func::SinPi | Func::CscPi => {
                let a = self.int(&args[0])?;
                let c = self.int(&args[1])?;
                if !(0 < a && a < c) {
                    return Err(QError::InvalidParameters(format!("need 0 < a < c, got {a}, {c}")).into());
                }
                let m = eulerian::trig_field(c);
                let v = if func == Func::SinPi {
                    sin_pi(a, c, m)
                } else {
                    csc_pi(a, c, m)
                }
                .map_err(QError::from)?;
                return Ok(Value::Mono(Monomial::constant(v)?));
            }
            Func::Zeta => {
                let m = self.positive(&args[0])?;
                let k = self.int(&args[1])?;
                let m = u32::try_from(m).map_err(|_| EvalError::Type(format!("order {m} too large")))?;
                let z = CycloNumber::zeta_power(m, k.mod_floor(&(m as i64)));
                return Ok(Value::Mono(Monomial::constant(z)?));
            }
        };
        Ok(Value::Series(s))
    }
}
