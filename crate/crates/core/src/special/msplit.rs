use super::{appell_m, theta_quotient, QError};
use crate::series::{Monomial, QSeries, Rational};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The splitting of `m(x, Q, z)` into `n` Appell–Lerch sums in base `Q^{n²}`
/// plus a sum of theta quotients, where `Q = q^p`.
///
/// Each piece is evaluated independently; for generic arguments the total
/// equals `appell_m(x, p, z)`.
pub fn msplit(
    x: &Monomial,
    base: Rational,
    z: &Monomial,
    zp: &Monomial,
    n: i64,
    order: Rational,
) -> Result<QSeries, QError> {
    if n < 1 {
        return Err(QError::InvalidParameters(format!(
            "msplit needs n >= 1, got {n}"
        )));
    }
    let qpow = |k: i64| Monomial::q_pow(base * k);
    let neg_x = x.neg();
    let neg_x_n = neg_x.pow(n);
    let base_n = base * n;
    let base_nn = base * (n * n);

    let mut total = QSeries::zero(order);
    for r in 0..n {
        let pre = qpow(-binom2(r + 1)).mul(&neg_x.pow(r));
        let arg = qpow(binom2(n) - n * r).mul(&neg_x_n).neg();
        let m = appell_m(&arg, base_nn, zp, order - pre.expo())?;
        total = total.add(&m.shift(&pre));
    }

    let j_n = (qpow(n), base * (3 * n));
    let c = qpow(binom2(n)).mul(&neg_x_n).mul(zp).neg();
    for r in 0..n {
        let pre = zp.mul(&qpow(binom2(r))).mul(&neg_x.mul(z).pow(r));
        let num = [
            j_n.clone(),
            j_n.clone(),
            j_n.clone(),
            (qpow(binom2(n) + r).mul(&neg_x_n).mul(z).mul(zp).neg(), base_n),
            (qpow(n * r).mul(&z.pow(n)).div(zp), base_nn),
        ];
        let den = [
            (x.mul(z), base),
            (zp.clone(), base_nn),
            (c.clone(), base_n),
            (qpow(r).mul(z), base_n),
        ];
        total = total.add(&theta_quotient(&pre, &num, &den, order)?);
    }
    Ok(total)
}
