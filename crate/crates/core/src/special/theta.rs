use num_integer::Integer;
use num_traits::Zero;

use super::sums::convex_range;
use super::{deepen, pochhammer, PochLength, QError};
use crate::series::{to_grid, Monomial, QSeries, Rational};

/// `J_{a,m}` (or `J̄_{a,m}` when barred); `J_m` is `J_{m,3m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaSpec {
    pub a: i64,
    pub m: i64,
    pub barred: bool,
}

impl ThetaSpec {
    pub fn plain(a: i64, m: i64) -> Self {
        ThetaSpec { a, m, barred: false }
    }

    pub fn barred(a: i64, m: i64) -> Self {
        ThetaSpec { a, m, barred: true }
    }

    /// `J_m = J_{m,3m}`.
    pub fn single(m: i64) -> Self {
        ThetaSpec::plain(m, 3 * m)
    }

    pub fn argument(&self) -> Monomial {
        let x = Monomial::q_int(self.a);
        if self.barred {
            x.neg()
        } else {
            x
        }
    }
}

/// `j(x; q^p)` vanishes identically exactly when `x = q^{pk}` for an integer `k`.
pub fn theta_vanishes(x: &Monomial, base: Rational) -> bool {
    x.coeff().is_one() && (x.expo() / base).is_integer()
}

/// `j(x; q^p) = Σ_n (−1)^n q^{p·n(n−1)/2} x^n`, to order `q^order`.
pub fn theta_j(x: &Monomial, base: Rational, order: Rational) -> QSeries {
    assert!(base > Rational::zero(), "theta base exponent must be positive");
    let expo = |n: i64| base * (n * (n - 1) / 2) + x.expo() * n;
    let range = convex_range(order, expo).expect("quadratic exponent grows");
    let d = order
        .denom()
        .lcm(base.denom())
        .lcm(x.expo().denom());
    let c = x.coeff();
    let c_inv = c.inv().unwrap();
    let terms = range.into_iter().map(|n| {
        let mut coeff = if n >= 0 {
            c.pow(n).unwrap()
        } else {
            c_inv.pow(-n).unwrap()
        };
        if n.is_odd() {
            coeff = -coeff;
        }
        (to_grid(expo(n), d), coeff)
    });
    QSeries::from_grid(d, to_grid(order, d), c.order(), terms)
}

/// The product side `(x)_∞ (q^p/x)_∞ (q^p)_∞`, for cross-checking [`theta_j`].
pub fn theta_product(x: &Monomial, base: Rational, order: Rational) -> QSeries {
    if theta_vanishes(x, base) {
        return QSeries::zero(order);
    }
    let qp = Monomial::q_pow(base);
    let result = deepen(order, |w| {
        let a = pochhammer(x, base, PochLength::Infinite, w);
        let b = pochhammer(&qp.div(x), base, PochLength::Infinite, w);
        let c = pochhammer(&qp, base, PochLength::Infinite, w);
        Ok(a.mul(&b).mul(&c))
    });
    result.expect("theta product precision")
}

/// `J_{a,m}` or `J̄_{a,m}`.
#[allow(non_snake_case)]
pub fn theta_J(spec: ThetaSpec, order: Rational) -> QSeries {
    theta_j(&spec.argument(), Rational::from_integer(spec.m), order)
}

/// `J_m = J_{m,3m} = (q^m; q^m)_∞`.
pub fn j_m(m: i64, order: Rational) -> QSeries {
    theta_J(ThetaSpec::single(m), order)
}

/// `prefactor · Π j(num_i) / Π j(den_i)` with each theta given as
/// `(argument, base exponent)`.
pub fn theta_quotient(
    prefactor: &Monomial,
    num: &[(Monomial, Rational)],
    den: &[(Monomial, Rational)],
    order: Rational,
) -> Result<QSeries, QError> {
    for (x, p) in den {
        if theta_vanishes(x, *p) {
            return Err(QError::NonGeneric(format!(
                "denominator j({x}; q^({p})) vanishes"
            )));
        }
    }
    if num.iter().any(|(x, p)| theta_vanishes(x, *p)) {
        return Ok(QSeries::zero(order));
    }
    deepen(order, |w| {
        let w = w - prefactor.expo();
        let mut top: Option<QSeries> = None;
        for (x, p) in num {
            let t = theta_j(x, *p, w);
            top = Some(match top {
                None => t,
                Some(acc) => acc.mul(&t),
            });
        }
        let top = top.unwrap_or_else(|| QSeries::one(w));
        let mut bottom: Option<QSeries> = None;
        for (x, p) in den {
            let t = theta_j(x, *p, w);
            bottom = Some(match bottom {
                None => t,
                Some(acc) => acc.mul(&t),
            });
        }
        let q = match bottom {
            None => top,
            Some(b) => top.div(&b, w)?,
        };
        Ok(q.shift(prefactor))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CycloNumber;
    use crate::series::order;

    /// Direct bilateral sum with integer coefficients; independent oracle.
    fn theta_oracle(c: i64, e: i64, p: i64, n_max: usize) -> Vec<i64> {
        let mut out = vec![0i64; n_max];
        for n in -60i64..=60 {
            let k = p * n * (n - 1) / 2 + e * n;
            if k >= 0 && (k as usize) < n_max {
                let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
                // c = ±1 for negative n
                let pow = c.pow(n.unsigned_abs() as u32);
                out[k as usize] += sign * pow;
            }
        }
        out
    }

    fn dense(s: &QSeries, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n];
        for (e, c) in s.terms() {
            let r = c.to_rational().unwrap();
            out[e.to_integer() as usize] = r.to_integer().try_into().unwrap();
        }
        out
    }

    #[test]
    fn vanishes_at_one() {
        let s = theta_j(&Monomial::int(1), order(1), order(30));
        assert!(s.is_zero());
        assert!(theta_vanishes(&Monomial::q_int(3), order(1)));
        assert!(!theta_vanishes(&Monomial::q_int(3), order(2)));
        assert!(!theta_vanishes(&Monomial::int(-1), order(1)));
    }

    #[test]
    fn j_1_2() {
        let s = theta_j(&Monomial::q_int(1), order(2), order(16));
        let oracle = theta_oracle(1, 1, 2, 16);
        assert_eq!(oracle[..10], [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]);
        assert_eq!(dense(&s, 16), oracle);
        assert_eq!(theta_J(ThetaSpec::plain(1, 2), order(16)), s);
        // J_{1,2} = J_1^2 / J_2
        let j1 = j_m(1, order(30));
        let j2 = j_m(2, order(30));
        let rhs = j1.mul(&j1).div(&j2, order(30)).unwrap();
        assert!(theta_J(ThetaSpec::plain(1, 2), order(30))
            .eq_to_order(&rhs, order(30))
            .unwrap()
            .agrees());
    }

    #[test]
    fn j_m_is_euler_product() {
        let j1 = j_m(1, order(20));
        let e = pochhammer(&Monomial::q_int(1), order(1), PochLength::Infinite, order(20));
        assert_eq!(j1, e);
    }

    #[test]
    fn sum_equals_product() {
        let xs = [
            Monomial::int(-1).times_q(Rational::new(1, 2)),
            Monomial::int(2).times_q(order(1)),
            Monomial::zeta(3, 1).times_q(Rational::new(3, 2)),
            Monomial::zeta(4, 1),
            Monomial::int(-1).times_q(order(-2)),
        ];
        for x in &xs {
            for p in [order(1), order(3), Rational::new(1, 2)] {
                let a = theta_j(x, p, order(25));
                let b = theta_product(x, p, order(25));
                assert!(a.eq_to_order(&b, order(25)).unwrap().agrees(), "x = {x}, p = {p}");
            }
        }
    }

    #[test]
    fn quotient_of_thetas() {
        // 2 J_2^2 / J_1 = J̄_{0,1}
        let two = Monomial::constant(CycloNumber::from_int(2, 1)).unwrap();
        let q2 = (Monomial::q_int(2), order(6));
        let lhs = theta_quotient(&two, &[q2.clone(), q2], &[(Monomial::q_int(1), order(3))], order(30))
            .unwrap();
        let rhs = theta_J(ThetaSpec::barred(0, 1), order(30));
        assert_eq!(lhs, rhs);
        assert!(theta_quotient(&two, &[], &[(Monomial::q_int(1), order(1))], order(10)).is_err());
    }
}
