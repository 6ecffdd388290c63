//! Summation engines shared by the theta, Appell–Lerch and Eulerian code:
//! bilateral Lambert-type series and unilateral q-hypergeometric sums.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use super::QError;
use crate::coeff::CycloNumber;
use crate::series::{to_grid, DenseUnit, Monomial, QSeries, Rational};

const SCAN_CAP: usize = 1 << 20;

/// Scan a convex function of `n ∈ Z` outward from 0 and return every `n`
/// with `value(n) < bound`.
pub(crate) fn convex_range<F>(bound: Rational, value: F) -> Result<Vec<i64>, QError>
where
    F: Fn(i64) -> Rational,
{
    let mut out = Vec::new();
    let mut n = 0i64;
    loop {
        let v = value(n);
        if v < bound {
            out.push(n);
        } else if v >= value(n - 1) {
            break;
        }
        n += 1;
        if n as usize > SCAN_CAP {
            return Err(QError::CapExceeded(SCAN_CAP));
        }
    }
    let mut n = -1i64;
    loop {
        let v = value(n);
        if v < bound {
            out.push(n);
        } else if v >= value(n + 1) {
            break;
        }
        n -= 1;
        if (-n) as usize > SCAN_CAP {
            return Err(QError::CapExceeded(SCAN_CAP));
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn ceil_order(order: Rational) -> i64 {
    order.ceil().to_integer()
}

/// `Σ_{n∈Z} s^n q^{a n²} / (1 − u·q^{f n})` to order `q^order`, for `a > 0`.
///
/// Each summand is expanded as a geometric series; the range of `n` is
/// found from the convex valuation `a n² + n·e(s) + max(0, −(e(u) + f n))`.
pub fn lambert_bilateral(
    s: &Monomial,
    a: Rational,
    u: &Monomial,
    f: Rational,
    order: Rational,
) -> Result<QSeries, QError> {
    if a <= Rational::zero() {
        return Err(QError::InvalidParameters(format!(
            "bilateral sum needs a positive quadratic exponent, got {a}"
        )));
    }
    if u.coeff().is_one() {
        let pole = if f.is_zero() {
            u.expo().is_zero().then_some(0)
        } else {
            let n0 = -u.expo() / f;
            n0.is_integer().then(|| n0.to_integer())
        };
        if let Some(n0) = pole {
            return Err(QError::NonGeneric(format!(
                "pole: 1 - ({u})*q^({f}*n) vanishes at n = {n0}"
            )));
        }
    }
    let d = [s.expo(), a, u.expo(), f, order]
        .iter()
        .fold(1i64, |d, r| d.lcm(r.denom()));
    let field = s.coeff().order().lcm(&u.coeff().order());
    let p = to_grid(order, d);
    let lin = |n: i64| u.expo() + f * n;
    let head = |n: i64| a * n * n + s.expo() * n;
    let range = convex_range(order, |n| {
        let g = lin(n);
        head(n) + if g < Rational::zero() { -g } else { Rational::zero() }
    })?;
    if range.is_empty() {
        return Ok(QSeries::from_grid(d, p, field, []));
    }

    let sc = s.coeff().lift_order(field)?;
    let sc_inv = sc.inv()?;
    let uc = u.coeff().lift_order(field)?;
    let uc_inv = uc.inv()?;
    let one = CycloNumber::one(field);
    let mut up_pows = vec![one.clone()];
    let mut down_pows = vec![one.clone()];
    let mut acc: BTreeMap<i64, CycloNumber> = BTreeMap::new();
    let mut add = |k: i64, c: CycloNumber| match acc.get_mut(&k) {
        Some(x) => *x = &*x + &c,
        None => {
            acc.insert(k, c);
        }
    };

    let lo = range[0];
    let mut s_pow = sc_inv.pow(-lo)?;
    let mut idx = 0;
    for n in lo..=*range.last().unwrap() {
        if idx < range.len() && range[idx] == n {
            idx += 1;
            let base_k = to_grid(head(n), d);
            let g = lin(n);
            if g > Rational::zero() {
                let step = to_grid(g, d);
                let mut k = base_k;
                let mut j = 0usize;
                while k < p {
                    if j == up_pows.len() {
                        let next = up_pows.last().unwrap() * &uc;
                        up_pows.push(next);
                    }
                    add(k, &s_pow * &up_pows[j]);
                    k += step;
                    j += 1;
                }
            } else if g.is_zero() {
                let c = (&one - &uc).inv()?;
                add(base_k, &s_pow * &c);
            } else {
                let step = -to_grid(g, d);
                let mut k = base_k + step;
                let mut j = 1usize;
                while k < p {
                    while j >= down_pows.len() {
                        let next = down_pows.last().unwrap() * &uc_inv;
                        down_pows.push(next);
                    }
                    add(k, -(&s_pow * &down_pows[j]));
                    k += step;
                    j += 1;
                }
            }
        }
        s_pow = &s_pow * &sc;
    }
    Ok(QSeries::from_grid(d, p, field, acc))
}

/// Factors introduced at summation index `n` of a unilateral Eulerian sum.
///
/// The summand at `n` is `prefactor(n) · Π num / Π den`, where the products
/// run over every `(1 − u)` introduced at indices up to and including `n`.
pub(crate) struct EulerStep {
    pub prefactor: Monomial,
    pub num: Vec<Monomial>,
    pub den: Vec<Monomial>,
}

/// `1 − u` written as `mono · (1 − w)` with `e(w) > 0`, or as a constant.
enum Binomial {
    Zero,
    Split { mono: Monomial, unit: Option<Monomial> },
}

fn split_binomial(u: &Monomial) -> Binomial {
    let e = u.expo();
    if e > Rational::zero() {
        Binomial::Split {
            mono: Monomial::int(1),
            unit: Some(u.clone()),
        }
    } else if e.is_zero() {
        let c = &CycloNumber::one(u.coeff().order()) - u.coeff();
        match Monomial::constant(c) {
            Ok(mono) => Binomial::Split { mono, unit: None },
            Err(_) => Binomial::Zero,
        }
    } else {
        Binomial::Split {
            mono: u.neg(),
            unit: Some(u.inv()),
        }
    }
}

struct Recorded {
    term: Monomial,
    num_units: Vec<Monomial>,
    den_units: Vec<Monomial>,
}

/// Unilateral sum `Σ_{n≥start}` of Eulerian summands, to order `q^order`.
///
/// Summation stops once the summand valuation is at least the order and
/// increasing; `CapExceeded` is raised if that never happens within
/// `10·(order + 10)` terms.
pub(crate) fn eulerian_sum<F>(start: i64, order: Rational, mut step: F) -> Result<QSeries, QError>
where
    F: FnMut(i64) -> EulerStep,
{
    let cap = (10 * (ceil_order(order).max(0) + 10)) as usize;
    let mut d = *order.denom();
    let mut field = 1u32;
    let mut num_mono = Monomial::int(1);
    let mut den_mono = Monomial::int(1);
    let mut recorded: Vec<Recorded> = Vec::new();
    let mut prev_val: Option<Rational> = None;
    let mut n = start;
    'outer: loop {
        if recorded.len() > cap {
            return Err(QError::CapExceeded(cap));
        }
        let st = step(n);
        d = st.prefactor.lcm_denom(d);
        field = field.lcm(&st.prefactor.coeff().order());
        let mut num_units = Vec::new();
        let mut den_units = Vec::new();
        for u in &st.num {
            d = u.lcm_denom(d);
            field = field.lcm(&u.coeff().order());
            match split_binomial(u) {
                // every later summand carries this factor too
                Binomial::Zero => break 'outer,
                Binomial::Split { mono, unit } => {
                    num_mono = num_mono.mul(&mono);
                    num_units.extend(unit);
                }
            }
        }
        for u in &st.den {
            d = u.lcm_denom(d);
            field = field.lcm(&u.coeff().order());
            match split_binomial(u) {
                Binomial::Zero => {
                    return Err(QError::NonGeneric(format!(
                        "denominator factor 1 - ({u}) vanishes at n = {n}"
                    )))
                }
                Binomial::Split { mono, unit } => {
                    den_mono = den_mono.mul(&mono);
                    den_units.extend(unit);
                }
            }
        }
        let term = st.prefactor.mul(&num_mono).div(&den_mono);
        let val = term.expo();
        recorded.push(Recorded {
            term,
            num_units,
            den_units,
        });
        if val >= order && prev_val.is_some_and(|p| val > p) {
            break;
        }
        prev_val = Some(val);
        n += 1;
    }

    let p = to_grid(order, d);
    let min_val = recorded
        .iter()
        .map(|r| to_grid(r.term.expo(), d))
        .filter(|&k| k < p)
        .min();
    let Some(min_val) = min_val else {
        return Ok(QSeries::from_grid(d, p, field, []));
    };
    let len = (p - min_val) as usize;
    let mut unit = DenseUnit::one(d, len, field);
    let mut acc = QSeries::from_grid(d, p, field, []);
    for r in &recorded {
        for w in &r.num_units {
            let k = to_grid(w.expo(), d);
            if (k as usize) < len {
                unit.mul_binomial(w.coeff(), k);
            }
        }
        for w in &r.den_units {
            let k = to_grid(w.expo(), d);
            if (k as usize) < len {
                unit.div_binomial(w.coeff(), k);
            }
        }
        let e = to_grid(r.term.expo(), d);
        if e < p {
            let piece = unit.to_series(e, (p - e) as usize, r.term.coeff());
            acc = acc.add(&piece);
        }
    }
    Ok(acc)
}

/// `(−1)^n` as a monomial.
pub(crate) fn sign(n: i64) -> Monomial {
    Monomial::int(if n.is_odd() { -1 } else { 1 })
}
