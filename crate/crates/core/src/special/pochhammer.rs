use num_integer::Integer;
use num_traits::Zero;

use crate::coeff::CycloNumber;
use crate::series::{to_grid, DenseUnit, Monomial, QSeries, Rational};

/// Length of a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(u64),
    Infinite,
}

/// `(x; q^p)_n = Π_{i=0}^{n−1} (1 − x·q^{ip})`, to order `q^order`.
///
/// Factors with negative exponent are written as `−u·(1 − u^{−1})` so the
/// product is a monomial times a unit; a factor that is exactly `1 − 1`
/// makes the whole product zero.
pub fn pochhammer(x: &Monomial, base: Rational, n: PochLength, order: Rational) -> QSeries {
    assert!(base > Rational::zero(), "pochhammer base exponent must be positive");
    let limit = match n {
        PochLength::Finite(k) => Some(k),
        PochLength::Infinite => None,
    };
    let in_range = |i: u64| limit.is_none_or(|k| i < k);

    let mut d = order.denom().lcm(x.expo().denom()).lcm(base.denom());
    let mut mono = Monomial::int(1);
    let mut i = 0u64;
    // non-positive exponents first; there are finitely many of them
    while in_range(i) && x.expo() + base * i as i64 <= Rational::zero() {
        let u = x.times_q(base * i as i64);
        if u.expo().is_zero() {
            let c = &CycloNumber::one(u.coeff().order()) - u.coeff();
            if c.is_zero() {
                return QSeries::zero(order);
            }
            mono = mono.mul(&Monomial::constant(c).unwrap());
        } else {
            mono = mono.mul(&u.neg());
        }
        i += 1;
    }
    d = mono.lcm_denom(d);
    let rel = order - mono.expo();
    if rel <= Rational::zero() {
        return QSeries::zero(order);
    }
    let len = to_grid(rel, d) as usize;
    let field = x.coeff().order();
    let mut unit = DenseUnit::one(d, len, field);
    // factors (1 - u^{-1}) from the negative-exponent part
    for j in 0..i {
        let u = x.times_q(base * j as i64);
        if u.expo() < Rational::zero() {
            let w = u.inv();
            let k = to_grid(w.expo(), d);
            if (k as usize) < len {
                unit.mul_binomial(w.coeff(), k);
            }
        }
    }
    while in_range(i) {
        let u = x.times_q(base * i as i64);
        let k = to_grid(u.expo(), d);
        if k as usize >= len {
            break;
        }
        unit.mul_binomial(u.coeff(), k);
        i += 1;
    }
    unit.to_series(to_grid(mono.expo(), d), len, mono.coeff())
}
