//! Truncated Puiseux series in q with exact cyclotomic coefficients.
//!
//! A [`QSeries`] stores finitely many terms `c·q^(k/D)` on the grid `Z/D`
//! together with a precision `P`: every coefficient of an exponent `k/D`
//! with `k < P` is known exactly, everything at or above `q^(P/D)` is
//! unknown. Binary operations rebase both operands to a common grid and a
//! common cyclotomic field, and propagate precision so that no result ever
//! claims a coefficient it cannot certify.

mod dense;
mod monomial;

use std::borrow::Cow;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::CycloNumber;

pub(crate) use dense::DenseUnit;
pub use monomial::Monomial;

/// Exponents and truncation orders.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("monomial coefficient must be nonzero")]
    ZeroMonomial,
    #[error("fractional power of a monomial with coefficient other than 1")]
    FractionalPower,
    #[error("series is zero to precision q^({prec}) and cannot be inverted")]
    NotInvertible { prec: Rational },
    #[error("pole: 1/(1 - {term}) with {term} = 1")]
    Pole { term: String },
    #[error("requested order q^({requested}) exceeds guaranteed precision q^({available})")]
    InsufficientPrecision {
        requested: Rational,
        available: Rational,
    },
}

/// Outcome of comparing two series below a given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Agree {
        order: Rational,
    },
    Differ {
        exponent: Rational,
        lhs: CycloNumber,
        rhs: CycloNumber,
    },
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        matches!(self, Comparison::Agree { .. })
    }
}

/// Grid index of `e` on `Z/denom`; `denom` must be a multiple of `e`'s denominator.
pub(crate) fn to_grid(e: Rational, denom: i64) -> i64 {
    debug_assert_eq!(denom % e.denom(), 0);
    e.numer() * (denom / e.denom())
}

#[derive(Clone, Debug)]
pub struct QSeries {
    denom: i64,
    prec: i64,
    field_order: u32,
    terms: BTreeMap<i64, CycloNumber>,
}

impl QSeries {
    /// Build from grid terms; drops zero coefficients and terms at or above
    /// the precision, lifts coefficients to `field_order` and reduces the grid.
    pub(crate) fn from_grid<I>(denom: i64, prec: i64, field_order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, CycloNumber)>,
    {
        let mut field_order = field_order;
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            if k < prec && !c.is_zero() {
                field_order = field_order.lcm(&c.order());
                match map.entry(k) {
                    Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    Entry::Occupied(mut o) => {
                        let sum = o.get() + &c;
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        for c in map.values_mut() {
            if c.order() != field_order {
                *c = c.lift_order(field_order).unwrap();
            }
        }
        let mut s = QSeries {
            denom,
            prec,
            field_order,
            terms: map,
        };
        s.normalize();
        s
    }

    /// The zero series, known to order `q^order`.
    pub fn zero(order: Rational) -> Self {
        QSeries::from_grid(*order.denom(), *order.numer(), 1, [])
    }

    pub fn one(order: Rational) -> Self {
        Self::constant(CycloNumber::one(1), order)
    }

    pub fn constant(c: CycloNumber, order: Rational) -> Self {
        Self::from_monomial_or_zero(c, Rational::zero(), order)
    }

    pub fn from_monomial(m: &Monomial, order: Rational) -> Self {
        Self::from_monomial_or_zero(m.coeff().clone(), m.expo(), order)
    }

    fn from_monomial_or_zero(c: CycloNumber, e: Rational, order: Rational) -> Self {
        let d = order.denom().lcm(e.denom());
        let m = c.order();
        QSeries::from_grid(d, to_grid(order, d), m, [(to_grid(e, d), c)])
    }

    /// Build from (exponent, coefficient) pairs, known to order `q^order`.
    pub fn from_terms<I>(terms: I, order: Rational) -> Self
    where
        I: IntoIterator<Item = (Rational, CycloNumber)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let d = terms
            .iter()
            .fold(*order.denom(), |d, (e, _)| d.lcm(e.denom()));
        QSeries::from_grid(
            d,
            to_grid(order, d),
            1,
            terms.into_iter().map(|(e, c)| (to_grid(e, d), c)),
        )
    }

    fn normalize(&mut self) {
        let mut g = self.denom.gcd(&self.prec);
        for k in self.terms.keys() {
            if g == 1 {
                break;
            }
            g = g.gcd(k);
        }
        if g > 1 {
            self.denom /= g;
            self.prec /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, c)| (k / g, c))
                .collect();
        }
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    /// Guaranteed precision: coefficients of every exponent below this are exact.
    pub fn prec(&self) -> Rational {
        Rational::new(self.prec, self.denom)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// No nonzero coefficient below the precision.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Rational, &CycloNumber)> + '_ {
        self.terms
            .iter()
            .map(move |(&k, c)| (Rational::new(k, self.denom), c))
    }

    /// Terms as `(k, c)` meaning `c·q^{k/D}` with `D = self.denom()`.
    pub fn grid_terms(&self) -> impl Iterator<Item = (i64, &CycloNumber)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Least exponent with nonzero coefficient, or `None` when zero to precision.
    pub fn valuation(&self) -> Option<Rational> {
        self.terms
            .keys()
            .next()
            .map(|&k| Rational::new(k, self.denom))
    }

    /// Valuation, taking the precision for a series that is zero to its precision.
    pub fn valuation_or_prec(&self) -> Rational {
        self.valuation().unwrap_or_else(|| self.prec())
    }

    fn val_grid(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(self.prec)
    }

    pub fn coeff(&self, e: Rational) -> CycloNumber {
        if self.denom % e.denom() != 0 {
            return CycloNumber::zero(self.field_order);
        }
        self.terms
            .get(&to_grid(e, self.denom))
            .cloned()
            .unwrap_or_else(|| CycloNumber::zero(self.field_order))
    }

    /// Re-express on the grid `Z/denom`; `denom` must be a multiple of the current one.
    pub fn rebase(&self, denom: i64) -> QSeries {
        assert_eq!(denom % self.denom, 0, "rebase target must refine the grid");
        let f = denom / self.denom;
        QSeries {
            denom,
            prec: self.prec * f,
            field_order: self.field_order,
            terms: self.terms.iter().map(|(&k, c)| (k * f, c.clone())).collect(),
        }
    }

    /// Re-express every coefficient in Q(ζ_M′); the current order must divide M′.
    pub fn lift(&self, field_order: u32) -> QSeries {
        QSeries {
            denom: self.denom,
            prec: self.prec,
            field_order,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c.lift_order(field_order).unwrap()))
                .collect(),
        }
    }

    fn conformed(&self, denom: i64, field_order: u32) -> Cow<'_, QSeries> {
        if self.denom == denom && self.field_order == field_order {
            return Cow::Borrowed(self);
        }
        let mut s = if self.denom == denom {
            self.clone()
        } else {
            self.rebase(denom)
        };
        if s.field_order != field_order {
            s = s.lift(field_order);
        }
        Cow::Owned(s)
    }

    fn unify<'a>(a: &'a QSeries, b: &'a QSeries) -> (Cow<'a, QSeries>, Cow<'a, QSeries>, i64, u32) {
        let d = a.denom.lcm(&b.denom);
        let m = a.field_order.lcm(&b.field_order);
        (a.conformed(d, m), b.conformed(d, m), d, m)
    }

    /// Sum; the precision is the smaller of the two.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let (a, b, d, m) = QSeries::unify(self, other);
        let prec = a.prec.min(b.prec);
        let mut terms: BTreeMap<i64, CycloNumber> = a
            .terms
            .range(..prec)
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        for (&k, c) in b.terms.range(..prec) {
            match terms.get_mut(&k) {
                Some(x) => *x = &*x + c,
                None => {
                    terms.insert(k, c.clone());
                }
            }
        }
        QSeries::from_grid(d, prec, m, terms)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            denom: self.denom,
            prec: self.prec,
            field_order: self.field_order,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    /// Product. Precision is `min(P_a + val(b), P_b + val(a))`.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let (a, b, d, m) = QSeries::unify(self, other);
        let prec = (a.prec + b.val_grid()).min(b.prec + a.val_grid());
        let mut acc: BTreeMap<i64, CycloNumber> = BTreeMap::new();
        for (&ka, ca) in a.terms.iter() {
            for (&kb, cb) in b.terms.iter() {
                let k = ka + kb;
                if k >= prec {
                    break;
                }
                let p = ca * cb;
                match acc.get_mut(&k) {
                    Some(x) => *x = &*x + &p,
                    None => {
                        acc.insert(k, p);
                    }
                }
            }
        }
        QSeries::from_grid(d, prec, m, acc)
    }

    pub fn scale(&self, c: &CycloNumber) -> QSeries {
        let m = self.field_order.lcm(&c.order());
        QSeries::from_grid(
            self.denom,
            self.prec,
            m,
            self.terms.iter().map(|(&k, x)| (k, x * c)),
        )
    }

    /// `m.coeff · q^{m.expo} · self`.
    pub fn shift(&self, m: &Monomial) -> QSeries {
        let d = self.denom.lcm(m.expo().denom());
        let s = self.conformed(d, self.field_order);
        let e = to_grid(m.expo(), d);
        let fo = s.field_order.lcm(&m.coeff().order());
        QSeries::from_grid(
            d,
            s.prec + e,
            fo,
            s.terms.iter().map(|(&k, c)| (k + e, c * m.coeff())),
        )
    }

    /// Drop everything at or above `q^order`.
    pub fn truncate(&self, order: Rational) -> QSeries {
        let d = self.denom.lcm(order.denom());
        let s = self.conformed(d, self.field_order);
        let p = s.prec.min(to_grid(order, d));
        QSeries::from_grid(
            d,
            p,
            s.field_order,
            s.terms.range(..p).map(|(&k, c)| (k, c.clone())),
        )
    }

    /// `b` with `self·b = 1`, known to order `min(order, P − 2·val)`.
    pub fn invert(&self, order: Rational) -> Result<QSeries, SeriesError> {
        let d = self.denom.lcm(order.denom());
        let a = self.conformed(d, self.field_order);
        let (&v, lead) = a.terms.iter().next().ok_or(SeriesError::NotInvertible {
            prec: self.prec(),
        })?;
        let out_prec = to_grid(order, d).min(a.prec - 2 * v);
        let rel = out_prec + v;
        if rel <= 0 {
            return Ok(QSeries::from_grid(d, out_prec, a.field_order, []));
        }
        let lead_inv = lead.inv().expect("leading coefficient is nonzero");
        let stride = a.terms.keys().fold(0i64, |g, &k| g.gcd(&(k - v)));
        let stride = if stride == 0 { rel } else { stride };
        let unit: Vec<(usize, CycloNumber)> = a
            .terms
            .range(v + 1..v + rel)
            .map(|(&k, c)| (((k - v) / stride) as usize, c * &lead_inv))
            .collect();
        let n = ((rel + stride - 1) / stride) as usize;
        let zero = CycloNumber::zero(a.field_order);
        let mut b: Vec<CycloNumber> = Vec::with_capacity(n);
        b.push(CycloNumber::one(a.field_order));
        for t in 1..n {
            let mut s = zero.clone();
            for (i, u) in &unit {
                if *i > t {
                    break;
                }
                let prev = &b[t - i];
                if !prev.is_zero() {
                    s = &s + &(u * prev);
                }
            }
            b.push(-s);
        }
        Ok(QSeries::from_grid(
            d,
            out_prec,
            a.field_order,
            b.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| (t as i64 * stride - v, &c * &lead_inv)),
        ))
    }

    /// `self / den` to order `q^order` (subject to the precision of both).
    pub fn div(&self, den: &QSeries, order: Rational) -> Result<QSeries, SeriesError> {
        let inv = den.invert(order - self.valuation_or_prec())?;
        Ok(self.mul(&inv).truncate(order))
    }

    /// Integer power; negative powers invert to order `q^order` first.
    pub fn pow(&self, k: i64, order: Rational) -> Result<QSeries, SeriesError> {
        let base = if k < 0 {
            self.invert(order)?
        } else {
            self.clone()
        };
        if k == 0 {
            return Ok(QSeries::one(order));
        }
        let mut e = k.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        Ok(acc.unwrap())
    }

    /// Compare coefficients below `q^order`.
    pub fn eq_to_order(&self, other: &QSeries, order: Rational) -> Result<Comparison, SeriesError> {
        let (a, b, d, _) = QSeries::unify(self, other);
        let d2 = d.lcm(order.denom());
        let (a, b) = if d2 != d {
            (Cow::Owned(a.rebase(d2)), Cow::Owned(b.rebase(d2)))
        } else {
            (a, b)
        };
        let n = to_grid(order, d2);
        let available = a.prec.min(b.prec);
        if n > available {
            return Err(SeriesError::InsufficientPrecision {
                requested: order,
                available: Rational::new(available, d2),
            });
        }
        let mut keys: Vec<i64> = a
            .terms
            .range(..n)
            .chain(b.terms.range(..n))
            .map(|(&k, _)| k)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let zero = CycloNumber::zero(a.field_order);
        for k in keys {
            let x = a.terms.get(&k).unwrap_or(&zero);
            let y = b.terms.get(&k).unwrap_or(&zero);
            if x != y {
                return Ok(Comparison::Differ {
                    exponent: Rational::new(k, d2),
                    lhs: x.clone(),
                    rhs: y.clone(),
                });
            }
        }
        Ok(Comparison::Agree { order })
    }
}

/// Expansion of `1/(1 − u)` to order `q^order`.
///
/// For `u = c·q^f`: `f > 0` gives `Σ_{k≥0} c^k q^{kf}`; `f = 0` gives the
/// constant `1/(1 − c)`; `f < 0` gives `−Σ_{k≥1} c^{−k} q^{−kf}`.
pub fn geom_inverse(u: &Monomial, order: Rational) -> Result<QSeries, SeriesError> {
    let f = u.expo();
    let c = u.coeff();
    if f.is_zero() {
        if c.is_one() {
            return Err(SeriesError::Pole {
                term: u.to_string(),
            });
        }
        let v = (&CycloNumber::one(c.order()) - c).inv().unwrap();
        return Ok(QSeries::constant(v, order));
    }
    let d = order.denom().lcm(f.denom());
    let p = to_grid(order, d);
    let (step, ratio, first, sign) = if f > Rational::zero() {
        (to_grid(f, d), c.clone(), 0i64, 1i64)
    } else {
        (-to_grid(f, d), c.inv().unwrap(), 1i64, -1i64)
    };
    let mut terms = Vec::new();
    let mut power = ratio.pow(first).unwrap();
    if sign < 0 {
        power = -power;
    }
    let mut k = first * step;
    while k < p {
        terms.push((k, power.clone()));
        power = &power * &ratio;
        k += step;
    }
    Ok(QSeries::from_grid(d, p, c.order(), terms))
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _, _) = QSeries::unify(self, other);
        a.prec == b.prec && a.terms == b.terms
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

/// Compact one-line form, e.g. `1 - 2*q + 2*q^4 + O(q^16)`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let q = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                "q".into()
            } else if e.is_integer() && e > Rational::zero() {
                format!("q^{e}")
            } else {
                format!("q^({e})")
            };
            match (q.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{q}")?,
                (false, false) => write!(f, "({c})*{q}")?,
            }
        }
        if !self.terms.is_empty() {
            write!(f, " + ")?;
        }
        write!(f, "O(q^({}))", self.prec())
    }
}

/// Shorthand for an integer order.
pub fn order(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> Monomial {
        Monomial::q_int(e)
    }

    fn int_series(coeffs: &[(i64, i64)], ord: i64) -> QSeries {
        QSeries::from_terms(
            coeffs
                .iter()
                .map(|&(e, c)| (Rational::from_integer(e), CycloNumber::from_int(c, 1))),
            order(ord),
        )
    }

    #[test]
    fn add_cancels() {
        let a = int_series(&[(0, 1), (1, -1)], 20);
        let b = int_series(&[(1, 1)], 20);
        assert_eq!(a.add(&b), QSeries::one(order(20)));
    }

    #[test]
    fn add_takes_min_precision() {
        let a = int_series(&(0..10).map(|k| (k, 1)).collect::<Vec<_>>(), 10);
        let b = int_series(&(0..8).map(|k| (k, -1)).collect::<Vec<_>>(), 8);
        let s = a.add(&b);
        assert!(s.is_zero());
        assert_eq!(s.prec(), order(8));
        let z = QSeries::zero(order(5));
        assert_eq!(a.add(&z).prec(), order(5));
    }

    #[test]
    fn mul_basic() {
        let a = int_series(&[(0, 1), (1, -1)], 30);
        let b = int_series(&[(0, 1), (1, 1)], 30);
        assert_eq!(a.mul(&b), int_series(&[(0, 1), (2, -1)], 30));
        let h = QSeries::from_monomial(&Monomial::q_pow(Rational::new(1, 2)), order(10));
        let p = h.mul(&h);
        assert_eq!(p.prec(), Rational::new(21, 2));
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(order(1), &CycloNumber::one(1))]);
    }

    /// Brute-force dense convolution, independent of the sparse product.
    fn dense_product(factors: &[Vec<i64>], n: usize) -> Vec<i64> {
        let mut acc = vec![0i64; n];
        acc[0] = 1;
        for f in factors {
            let mut next = vec![0i64; n];
            for (i, &a) in acc.iter().enumerate() {
                for (j, &b) in f.iter().enumerate() {
                    if i + j < n {
                        next[i + j] += a * b;
                    }
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn euler_partial_product() {
        let factors: Vec<Vec<i64>> = (1..=12)
            .map(|i| {
                let mut v = vec![0; i + 1];
                v[0] = 1;
                v[i] = -1;
                v
            })
            .collect();
        let oracle = dense_product(&factors, 13);
        assert_eq!(oracle, vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        let mut p = QSeries::one(order(13));
        for i in 1..=12 {
            p = p.mul(&int_series(&[(0, 1), (i, -1)], 13));
        }
        let expected: Vec<(i64, i64)> = oracle
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as i64, c))
            .collect();
        assert_eq!(p.eq_to_order(&int_series(&expected, 13), order(13)).unwrap(), Comparison::Agree { order: order(13) });
    }

    #[test]
    fn mul_precision_rule() {
        // q^2 * (known to 10) is known to 12
        let a = QSeries::from_monomial(&q(2), order(40));
        let b = int_series(&[(0, 1), (3, 5)], 10);
        assert_eq!(a.mul(&b).prec(), order(12));
    }

    #[test]
    fn invert_geometric() {
        let a = int_series(&[(0, 1), (1, -1)], 25);
        let inv = a.invert(order(20)).unwrap();
        assert_eq!(inv, int_series(&(0..20).map(|k| (k, 1)).collect::<Vec<_>>(), 20));
        let inv_q = QSeries::from_monomial(&q(1), order(20)).invert(order(20)).unwrap();
        assert_eq!(inv_q.valuation(), Some(order(-1)));
        assert_eq!(inv_q.len(), 1);
        assert!(matches!(
            QSeries::zero(order(5)).invert(order(5)),
            Err(SeriesError::NotInvertible { .. })
        ));
    }

    #[test]
    fn shift_rebases_grid() {
        let a = int_series(&(0..10).map(|k| (k, 1)).collect::<Vec<_>>(), 10);
        let s = a.shift(&Monomial::q_pow(Rational::new(1, 8)));
        assert_eq!(s.denom(), 8);
        assert_eq!(s.len(), a.len());
        assert_eq!(s.valuation(), Some(Rational::new(1, 8)));
        let m = QSeries::one(order(10)).shift(&q(1).neg());
        assert_eq!(m, int_series(&[(1, -1)], 11));
    }

    #[test]
    fn geom_inverse_cases() {
        let g = geom_inverse(&q(1), order(10)).unwrap();
        assert_eq!(g, int_series(&(0..10).map(|k| (k, 1)).collect::<Vec<_>>(), 10));
        let two = geom_inverse(&Monomial::int(2), order(10)).unwrap();
        assert_eq!(two, int_series(&[(0, -1)], 10));
        let neg = geom_inverse(&q(-1), order(10)).unwrap();
        assert_eq!(neg, int_series(&(1..10).map(|k| (k, -1)).collect::<Vec<_>>(), 10));
        // oracle: (1 - q^{-1}) * result == 1
        let one_minus = int_series(&[(-1, -1), (0, 1)], 20);
        let prod = one_minus.mul(&neg);
        assert!(prod.eq_to_order(&QSeries::one(order(9)), order(9)).unwrap().agrees());
        assert!(matches!(
            geom_inverse(&Monomial::int(1), order(10)),
            Err(SeriesError::Pole { .. })
        ));
    }

    #[test]
    fn compare_to_order() {
        let one = QSeries::one(order(10));
        let other = int_series(&[(0, 1), (5, 1)], 10);
        assert!(one.eq_to_order(&one, order(10)).unwrap().agrees());
        assert!(one.eq_to_order(&other, order(5)).unwrap().agrees());
        match one.eq_to_order(&other, order(6)).unwrap() {
            Comparison::Differ { exponent, lhs, rhs } => {
                assert_eq!(exponent, order(5));
                assert!(lhs.is_zero());
                assert!(rhs.is_one());
            }
            c => panic!("unexpected {c:?}"),
        }
        assert!(matches!(
            one.eq_to_order(&other, order(11)),
            Err(SeriesError::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn display_compact() {
        let a = int_series(&[(0, 1), (1, -2), (4, 2)], 9);
        assert_eq!(a.to_string(), "(1) + (-2)*q + (2)*q^4 + O(q^(9))");
    }
}
