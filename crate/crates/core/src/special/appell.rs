use num_traits::One;

use super::{lambert_bilateral, theta_j, theta_quotient, theta_vanishes, QError};
use crate::series::{Monomial, QSeries, Rational};

/// The Appell–Lerch sum
/// `m(x, q^p, z) = (1/j(z; q^p)) Σ_r (−1)^r q^{p·r(r−1)/2} z^r / (1 − q^{p(r−1)} x z)`,
/// to order `q^order`.
pub fn appell_m(x: &Monomial, base: Rational, z: &Monomial, order: Rational) -> Result<QSeries, QError> {
    if theta_vanishes(z, base) {
        return Err(QError::NonGeneric(format!(
            "j(z; q^({base})) vanishes for z = {z}"
        )));
    }
    let half = base / 2;
    // (-1)^r q^{p r(r-1)/2} z^r = (-z q^{-p/2})^r q^{(p/2) r^2}
    let s = z.neg().times_q(-half);
    let u = x.mul(z).times_q(-base);

    let probe = theta_j(z, base, order.max(Rational::one()) + 1);
    let v_j = probe.valuation().ok_or_else(|| {
        QError::NonGeneric(format!("j(z; q^({base})) is zero to order for z = {z}"))
    })?;
    let sum = lambert_bilateral(&s, half, &u, base, order + v_j).map_err(|e| match e {
        QError::NonGeneric(msg) => QError::NonGeneric(format!("m({x}, q^({base}), {z}): {msg}")),
        other => other,
    })?;
    let v_s = sum.valuation_or_prec();
    let j = theta_j(z, base, (order - v_s + v_j * 2).max(v_j + 1));
    let inv = j.invert(order - v_s)?;
    Ok(sum.mul(&inv).truncate(order))
}

/// The theta quotient `m(x, q, z₁) − m(x, q, z₀)` equals:
/// `z₀ J₁³ j(z₁/z₀) j(x z₀ z₁) / (j(z₀) j(z₁) j(x z₀) j(x z₁))`, all in base `q^p`.
pub fn m_change_z_correction(
    x: &Monomial,
    z0: &Monomial,
    z1: &Monomial,
    base: Rational,
    order: Rational,
) -> Result<QSeries, QError> {
    let qp = Monomial::q_pow(base);
    let j1 = (qp.clone(), base * 3);
    theta_quotient(
        z0,
        &[
            j1.clone(),
            j1.clone(),
            j1,
            (z1.div(z0), base),
            (x.mul(z0).mul(z1), base),
        ],
        &[
            (z0.clone(), base),
            (z1.clone(), base),
            (x.mul(z0), base),
            (x.mul(z1), base),
        ],
        order,
    )
}
