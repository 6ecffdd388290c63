use super::sums::{eulerian_sum, EulerStep};
use super::{appell_m, QError};
use crate::series::{Monomial, QSeries, Rational};

/// `g(x, Q) = Σ_{n≥0} Q^{n(n+1)} / ((x; Q)_{n+1} (Q/x; Q)_{n+1})` with `Q = q^p`.
pub fn g_lambert(x: &Monomial, base: Rational, order: Rational) -> Result<QSeries, QError> {
    let qx = Monomial::q_pow(base).div(x);
    eulerian_sum(0, order, |n| EulerStep {
        prefactor: Monomial::q_pow(base * (n * (n + 1))),
        num: Vec::new(),
        den: vec![x.times_q(base * n), qx.times_q(base * n)],
    })
}

/// `g(x, Q) = x^{−1}(−1 + Σ_{n≥0} Q^{n²} / ((x; Q)_{n+1} (Q/x; Q)_n))`.
pub fn g_first_form(x: &Monomial, base: Rational, order: Rational) -> Result<QSeries, QError> {
    let qx = Monomial::q_pow(base).div(x);
    let inner = order + x.expo();
    let sum = eulerian_sum(0, inner, |n| {
        let mut den = vec![x.times_q(base * n)];
        if n > 0 {
            den.push(qx.times_q(base * (n - 1)));
        }
        EulerStep {
            prefactor: Monomial::q_pow(base * (n * n)),
            num: Vec::new(),
            den,
        }
    })?;
    let bracket = sum.sub(&QSeries::one(inner));
    Ok(bracket.shift(&x.inv()).truncate(order))
}

/// `g(x, Q) = −x^{−1} m(Q² x^{−3}, Q³, x²) − x^{−2} m(Q x^{−3}, Q³, x²)`.
pub fn g_appell(x: &Monomial, base: Rational, order: Rational) -> Result<QSeries, QError> {
    let x2 = x.pow(2);
    let xm3 = x.pow(-3);
    let b3 = base * 3;
    let pre1 = x.inv().neg();
    let pre2 = x.pow(-2).neg();
    let m1 = appell_m(&xm3.times_q(base * 2), b3, &x2, order - pre1.expo())?;
    let m2 = appell_m(&xm3.times_q(base), b3, &x2, order - pre2.expo())?;
    Ok(m1.shift(&pre1).add(&m2.shift(&pre2)))
}

/// The universal mock theta function `g(x, q^p)`, from its Lambert-type sum.
pub fn g_universal(x: &Monomial, base: Rational, order: Rational) -> Result<QSeries, QError> {
    g_lambert(x, base, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CycloNumber;
    use crate::series::order;
    use crate::special::{pochhammer, PochLength};

    #[test]
    fn third_order_f() {
        // f(q) = sum q^{n^2} / (-q)_n^2 = 2 - 2 g(-1, q)
        let n_ord = order(30);
        let mut f = QSeries::zero(n_ord);
        for n in 0..6i64 {
            let den = pochhammer(&Monomial::int(-1).times_q(order(1)), order(1), PochLength::Finite(n as u64), n_ord);
            let den = den.mul(&den);
            f = f.add(&den.invert(n_ord).unwrap().shift(&Monomial::q_int(n * n)));
        }
        let g = g_universal(&Monomial::int(-1), order(1), n_ord).unwrap();
        let rhs = QSeries::constant(CycloNumber::from_int(2, 1), n_ord)
            .sub(&g.scale(&CycloNumber::from_int(2, 1)));
        assert!(f.eq_to_order(&rhs, n_ord).unwrap().agrees());
        let start: Vec<i64> = f
            .terms()
            .take(5)
            .map(|(_, c)| c.to_rational().unwrap().to_integer().try_into().unwrap())
            .collect();
        assert_eq!(start, [1, 1, -2, 3, -3]);
    }

    #[test]
    fn three_forms_agree() {
        let xs = [
            Monomial::zeta(3, 1),
            Monomial::zeta(5, 2),
            Monomial::int(2).times_q(Rational::new(1, 2)),
            Monomial::q_int(2),
        ];
        for (x, p) in xs.iter().zip([order(1), order(1), order(1), order(10)]) {
            let a = g_lambert(x, p, order(30)).unwrap();
            let b = g_first_form(x, p, order(30)).unwrap();
            let c = g_appell(x, p, order(30)).unwrap();
            assert!(a.eq_to_order(&b, order(30)).unwrap().agrees(), "x = {x}");
            assert!(a.eq_to_order(&c, order(30)).unwrap().agrees(), "x = {x}");
        }
        // x = -1 puts j(x^2; q^3) = 0 in the Appell-Lerch form
        let x = Monomial::int(-1);
        assert!(g_appell(&x, order(1), order(10)).unwrap_err().is_nongeneric());
        let a = g_lambert(&x, order(1), order(30)).unwrap();
        let b = g_first_form(&x, order(1), order(30)).unwrap();
        assert!(a.eq_to_order(&b, order(30)).unwrap().agrees());
    }

    #[test]
    fn pole_is_refused() {
        assert!(g_lambert(&Monomial::int(1), order(1), order(10)).is_err());
        assert!(g_lambert(&Monomial::q_int(1), order(1), order(10)).is_err());
    }
}
