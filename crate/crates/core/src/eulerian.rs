//! Eulerian (q-hypergeometric) series: the sixth-order `φ`, `σ`, the
//! third-order `f`, the fifth-order `f₀`, and the combinations `K′`, `K″`,
//! `H′`, `K̃`, `H̃` together with their closed forms.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{csc_pi, sin_pi, CycloNumber};
use crate::series::{Comparison, Monomial, QSeries, Rational};
use crate::special::sums::{eulerian_sum as sum_terms, sign, EulerStep};
use crate::special::{appell_m, deepen, lambert_bilateral, theta_J, theta_quotient, QError, ThetaSpec};

/// Which construction of `H̃(a, c)` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HRoute {
    /// `q^{(a/c)(1−a/c)}(H′(a,c,1) − H′(a,c,−1))`.
    HPrime,
    /// `q^{(a/c)(1−a/c)}(H(a,0,c) − H(a,c/2,c))`.
    Lambert,
    /// `2q^{(a/c)(1−a/c)} J₂³ / (J_{1,2} j(q^{2a/c}; q²))`.
    Closed,
}

/// An Eulerian series together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerianSpec {
    Phi6 { base: Rational },
    Sigma6 { base: Rational },
    F3 { base: Rational },
    F0 { base: Rational },
    KPrime { omega: Monomial },
    KPrimePrime { omega: Monomial },
    HPrime { a: i64, c: i64, omega: Monomial },
    KTilde { a: i64, c: i64 },
    HTilde { a: i64, c: i64, route: HRoute },
    HAbc { a: i64, b: Rational, c: i64 },
    Rln2Lhs { x: Monomial },
    Rln4Lhs { x: Monomial },
}

/// Expand `spec` to order `q^order`.
pub fn eulerian_sum(spec: &EulerianSpec, order: Rational) -> Result<QSeries, QError> {
    match spec {
        EulerianSpec::Phi6 { base } => phi6(*base, order),
        EulerianSpec::Sigma6 { base } => sigma6(*base, order),
        EulerianSpec::F3 { base } => f3(*base, order),
        EulerianSpec::F0 { base } => f0(*base, order),
        EulerianSpec::KPrime { omega } => k_prime(omega, order),
        EulerianSpec::KPrimePrime { omega } => k_double_prime(omega, order),
        EulerianSpec::HPrime { a, c, omega } => h_prime(*a, *c, omega, order),
        EulerianSpec::KTilde { a, c } => k_tilde(*a, *c, order),
        EulerianSpec::HTilde { a, c, route } => h_tilde(*a, *c, *route, order),
        EulerianSpec::HAbc { a, b, c } => h_abc(*a, *b, *c, order),
        EulerianSpec::Rln2Lhs { x } => rln2_lhs(x, order),
        EulerianSpec::Rln4Lhs { x } => rln4_lhs(x, order),
    }
}

fn qp(e: Rational) -> Monomial {
    Monomial::q_pow(e)
}

fn minus_qp(e: Rational) -> Monomial {
    Monomial::int(-1).times_q(e)
}

fn check_angle(a: i64, c: i64) -> Result<(), QError> {
    if 0 < a && a < c {
        Ok(())
    } else {
        Err(QError::InvalidParameters(format!("need 0 < a < c, got a = {a}, c = {c}")))
    }
}

/// `φ(Q) = Σ (−1)^n Q^{n²} (Q; Q²)_n / (−Q; Q)_{2n}`, `Q = q^p`.
pub fn phi6(base: Rational, order: Rational) -> Result<QSeries, QError> {
    sum_terms(0, order, |n| {
        let (num, den) = if n == 0 {
            (vec![], vec![])
        } else {
            (
                vec![qp(base * (2 * n - 1))],
                vec![minus_qp(base * (2 * n - 1)), minus_qp(base * (2 * n))],
            )
        };
        EulerStep {
            prefactor: sign(n).times_q(base * (n * n)),
            num,
            den,
        }
    })
}

/// `σ(Q) = Σ Q^{(n+1)(n+2)/2} (−Q)_n / (Q; Q²)_{n+1}`.
pub fn sigma6(base: Rational, order: Rational) -> Result<QSeries, QError> {
    sum_terms(0, order, |n| EulerStep {
        prefactor: qp(base * ((n + 1) * (n + 2) / 2)),
        num: if n == 0 { vec![] } else { vec![minus_qp(base * n)] },
        den: vec![qp(base * (2 * n + 1))],
    })
}

/// `f(Q) = Σ Q^{n²} / (−Q)_n²`.
pub fn f3(base: Rational, order: Rational) -> Result<QSeries, QError> {
    sum_terms(0, order, |n| EulerStep {
        prefactor: qp(base * (n * n)),
        num: vec![],
        den: if n == 0 { vec![] } else { vec![minus_qp(base * n); 2] },
    })
}

/// `f₀(Q) = Σ Q^{n²} / (−Q)_n`.
pub fn f0(base: Rational, order: Rational) -> Result<QSeries, QError> {
    sum_terms(0, order, |n| EulerStep {
        prefactor: qp(base * (n * n)),
        num: vec![],
        den: if n == 0 { vec![] } else { vec![minus_qp(base * n)] },
    })
}

/// `K′(ω) = Σ_{n≥0} (−1)^n q^{n²} (q; q²)_n / ((ωq²; q²)_n (ω^{−1}q²; q²)_n)`.
pub fn k_prime(omega: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let w_inv = omega.inv();
    sum_terms(0, order, |n| {
        let two_n = Rational::from_integer(2 * n);
        let (num, den) = if n == 0 {
            (vec![], vec![])
        } else {
            (
                vec![Monomial::q_int(2 * n - 1)],
                vec![omega.times_q(two_n), w_inv.times_q(two_n)],
            )
        };
        EulerStep {
            prefactor: sign(n).times_q(Rational::from_integer(n * n)),
            num,
            den,
        }
    })
}

/// `K″(ω) = Σ_{n≥1} (−1)^n q^{n²} (q; q²)_{n−1} / ((ωq; q²)_n (ω^{−1}q; q²)_n)`.
pub fn k_double_prime(omega: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let w_inv = omega.inv();
    sum_terms(1, order, |n| {
        let e = Rational::from_integer(2 * n - 1);
        EulerStep {
            prefactor: sign(n).times_q(Rational::from_integer(n * n)),
            num: if n == 1 { vec![] } else { vec![Monomial::q_int(2 * n - 3)] },
            den: vec![omega.times_q(e), w_inv.times_q(e)],
        }
    })
}

/// `H′(a, c, ω) = Σ_{n≥0} q^{n(n+1)/2} (−q)_n / ((ωq^{a/c})_{n+1} (ωq^{1−a/c})_{n+1})`.
pub fn h_prime(a: i64, c: i64, omega: &Monomial, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let t = Rational::new(a, c);
    let lo = omega.times_q(t);
    let hi = omega.times_q(Rational::one() - t);
    sum_terms(0, order, |n| {
        let nn = Rational::from_integer(n);
        EulerStep {
            prefactor: Monomial::q_int(n * (n + 1) / 2),
            num: if n == 0 { vec![] } else { vec![minus_qp(nn)] },
            den: vec![lo.times_q(nn), hi.times_q(nn)],
        }
    })
}

/// Left side of the first Lost Notebook identity:
/// `Σ (−1)^n q^{n²} (q; q²)_n / ((x; q²)_{n+1} (q²/x; q²)_n)`.
pub fn rln2_lhs(x: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let x_inv = x.inv();
    sum_terms(0, order, |n| {
        let two_n = Rational::from_integer(2 * n);
        let (num, den) = if n == 0 {
            (vec![], vec![x.clone()])
        } else {
            (
                vec![Monomial::q_int(2 * n - 1)],
                vec![x.times_q(two_n), x_inv.times_q(two_n)],
            )
        };
        EulerStep {
            prefactor: sign(n).times_q(Rational::from_integer(n * n)),
            num,
            den,
        }
    })
}

/// Left side of the second Lost Notebook identity:
/// `(1 − 1/x) Σ (−1)^n (q; q²)_n q^{(n+1)²} / ((xq; q²)_{n+1} (q/x; q²)_{n+1})`.
pub fn rln4_lhs(x: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let x_inv = x.inv();
    let loss = x.expo().max(Rational::zero());
    let sum = sum_terms(0, order + loss, |n| {
        let e = Rational::from_integer(2 * n + 1);
        EulerStep {
            prefactor: sign(n).times_q(Rational::from_integer((n + 1) * (n + 1))),
            num: if n == 0 { vec![] } else { vec![Monomial::q_int(2 * n - 1)] },
            den: vec![x.times_q(e), x_inv.times_q(e)],
        }
    })?;
    let w = order + loss;
    let factor = QSeries::one(w).sub(&QSeries::from_monomial(&x_inv, w));
    Ok(factor.mul(&sum).truncate(order))
}

/// The field `Q(ζ_{lcm(4, 2c)})` holding `i`, `ζ_{2c}` and the trigonometric constants.
pub fn trig_field(c: i64) -> u32 {
    4u32.lcm(&(2 * c as u32))
}

/// The level constant `f_c = 2c / gcd(c, 4)`.
pub fn level_factor(c: i64) -> i64 {
    2 * c / c.gcd(&4)
}

/// `ζ_c^a` as a monomial in `Q(ζ_{lcm(4,2c)})`.
fn zeta_c(a: i64, c: i64) -> Monomial {
    let m = trig_field(c);
    Monomial::constant(CycloNumber::zeta_power(m, a * m as i64 / c)).unwrap()
}

fn eighth() -> Rational {
    Rational::new(1, 8)
}

/// `K̃(a, c) = (1/4)csc(πa/c) q^{−1/8} K′(ζ_c^a) + sin(πa/c) q^{−1/8} K″(ζ_c^a)`.
pub fn k_tilde(a: i64, c: i64, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let m = trig_field(c);
    let omega = zeta_c(a, c);
    let inner = order + eighth();
    let kp = k_prime(&omega, inner)?;
    let kpp = k_double_prime(&omega, inner)?;
    let quarter = BigRational::new(1.into(), 4.into());
    let csc = csc_pi(a, c, m)?.scale(&quarter);
    let sin = sin_pi(a, c, m)?;
    let sum = kp.scale(&csc).add(&kpp.scale(&sin));
    Ok(sum.shift(&Monomial::q_pow(-eighth())).truncate(order))
}

/// The closed form `−(i ζ_{2c}^a q^{−1/8} / 2) J_{1,2}² / j(ζ_c^a; q)`.
pub fn k_tilde_closed(a: i64, c: i64, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let m = trig_field(c);
    let mi = m as i64;
    let half = BigRational::new((-1).into(), 2.into());
    let coeff = (&CycloNumber::zeta_power(m, mi / 4) * &CycloNumber::zeta_power(m, a * mi / (2 * c)))
        .scale(&half);
    let pre = Monomial::new(coeff, -eighth())?;
    let j12 = (Monomial::q_int(1), Rational::from_integer(2));
    theta_quotient(&pre, &[j12.clone(), j12], &[(zeta_c(a, c), Rational::one())], order)
}

fn h_shift(a: i64, c: i64) -> Rational {
    let t = Rational::new(a, c);
    t * (Rational::one() - t)
}

/// `H̃(a, c)` by the chosen construction.
pub fn h_tilde(a: i64, c: i64, route: HRoute, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let pre = Monomial::q_pow(h_shift(a, c));
    let inner = order - pre.expo();
    let diff = match route {
        HRoute::HPrime => {
            h_prime(a, c, &Monomial::int(1), inner)?.sub(&h_prime(a, c, &Monomial::int(-1), inner)?)
        }
        HRoute::Lambert => {
            if c % 2 != 0 {
                return Err(QError::Parity(c));
            }
            let half = Rational::from_integer(c / 2);
            h_abc(a, Rational::zero(), c, inner)?.sub(&h_abc(a, half, c, inner)?)
        }
        HRoute::Closed => return h_tilde_closed(a, c, order),
    };
    Ok(diff.shift(&pre).truncate(order))
}

/// The closed form `2q^{(a/c)(1−a/c)} J₂³ / (J_{1,2} j(q^{2a/c}; q²))`.
pub fn h_tilde_closed(a: i64, c: i64, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let pre = Monomial::int(2).times_q(h_shift(a, c));
    let two = Rational::from_integer(2);
    let j2 = (Monomial::q_int(2), Rational::from_integer(6));
    theta_quotient(
        &pre,
        &[j2.clone(), j2.clone(), j2],
        &[(Monomial::q_int(1), two), (Monomial::q_pow(Rational::new(2 * a, c)), two)],
        order,
    )
}

/// `ζ_c^b` for integer or half-integer `b`.
fn zeta_c_pow(c: i64, b: Rational) -> Result<Monomial, QError> {
    if b.is_integer() {
        Ok(Monomial::zeta(c as u32, b.to_integer()))
    } else if *b.denom() == 2 {
        Ok(Monomial::zeta(2 * c as u32, *b.numer()))
    } else {
        Err(QError::InvalidParameters(format!("b = {b} must be an integer or half an integer")))
    }
}

/// `H(a, b, c) = J_{1,2}^{−1} Σ_n (−1)^n q^{n + a/c} q^{n(n+1)} / (1 − ζ_c^b q^{n + a/c})`,
/// with `b` an integer or half an integer.
pub fn h_abc(a: i64, b: Rational, c: i64, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let t = Rational::new(a, c);
    let u = zeta_c_pow(c, b)?.times_q(t);
    let s = minus_qp(Rational::from_integer(2));
    deepen(order - t, |w| {
        let sum = lambert_bilateral(&s, Rational::one(), &u, Rational::one(), w)?;
        let j12 = theta_J(ThetaSpec::plain(1, 2), w);
        Ok(sum.div(&j12, w)?)
    })
    .map(|h| h.shift(&Monomial::q_pow(t)))
}

/// `H(a, b, c)` in Appell–Lerch form:
/// `−q^{a/c−1} m(ζ_c^{2b} q^{2a/c−1}, q², q) + ζ_c^{−b} J₂³ / (J_{1,2} j(ζ_c^{2b} q^{2a/c}; q²))`.
pub fn h_abc_appell(a: i64, b: Rational, c: i64, order: Rational) -> Result<QSeries, QError> {
    check_angle(a, c)?;
    let t = Rational::new(a, c);
    let two = Rational::from_integer(2);
    let zeta2b = zeta_c_pow(c, b * 2)?;
    let pre = Monomial::int(-1).times_q(t - 1);
    let m = appell_m(&zeta2b.times_q(t * 2 - 1), two, &Monomial::q_int(1), order - pre.expo())?;
    let j2 = (Monomial::q_int(2), Rational::from_integer(6));
    let quotient = theta_quotient(
        &zeta_c_pow(c, -b)?,
        &[j2.clone(), j2.clone(), j2],
        &[(Monomial::q_int(1), two), (zeta2b.times_q(t * 2), two)],
        order,
    )?;
    Ok(m.shift(&pre).add(&quotient))
}

/// `m(−x, q, −1) ± J_{1,2}² / (2 j(x; q))`.
fn rln_rhs(x: &Monomial, plus: bool, order: Rational) -> Result<QSeries, QError> {
    let m = appell_m(&x.neg(), Rational::one(), &Monomial::int(-1), order)?;
    let half = Monomial::rational(&BigRational::new(1.into(), 2.into()))?;
    let j12 = (Monomial::q_int(1), Rational::from_integer(2));
    let q = theta_quotient(&half, &[j12.clone(), j12], &[(x.clone(), Rational::one())], order)?;
    Ok(if plus { m.add(&q) } else { m.sub(&q) })
}

/// Check both Lost Notebook identities at `x`, returning one comparison each.
pub fn rln_pair_check(x: &Monomial, order: Rational) -> Result<[Comparison; 2], QError> {
    let l2 = rln2_lhs(x, order)?;
    let r2 = rln_rhs(x, true, order)?;
    let l4 = rln4_lhs(x, order)?;
    let r4 = rln_rhs(x, false, order)?;
    Ok([l2.eq_to_order(&r2, order)?, l4.eq_to_order(&r4, order)?])
}

/// `(1/J̄_{1,4}) Σ_n q^{2n²+n} / (1 − ωq^{2n})`.
pub fn kang1_rhs(omega: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let two = Rational::from_integer(2);
    let sum = lambert_bilateral(&Monomial::q_int(1), two, omega, two, order)?;
    let jb = theta_J(ThetaSpec::barred(1, 4), order);
    Ok(sum.div(&jb, order)?)
}

/// `−(1/J̄_{1,4}) Σ_n q^{2n²+3n+1} / (1 − ωq^{2n+1})`.
pub fn kang2_rhs(omega: &Monomial, order: Rational) -> Result<QSeries, QError> {
    let two = Rational::from_integer(2);
    let inner = order - 1;
    let sum = lambert_bilateral(&Monomial::q_int(3), two, &omega.times_q(Rational::one()), two, inner)?;
    let jb = theta_J(ThetaSpec::barred(1, 4), inner);
    Ok(sum.div(&jb, inner)?.shift(&Monomial::int(-1).times_q(Rational::one())))
}

/// Check both of Kang's identities at `ω`:
/// `K′(ω)/(1 − ω)` against [`kang1_rhs`] and `(1 − 1/ω) K″(ω)` against [`kang2_rhs`].
pub fn kang_check(omega: &Monomial, order: Rational) -> Result<[Comparison; 2], QError> {
    let r1 = kang1_rhs(omega, order)?;
    let r2 = kang2_rhs(omega, order)?;
    let one_minus = QSeries::one(order).sub(&QSeries::from_monomial(omega, order));
    let l1 = k_prime(omega, order)?.div(&one_minus, order)?;
    let inner = order + omega.expo().max(Rational::zero());
    let factor = QSeries::one(inner).sub(&QSeries::from_monomial(&omega.inv(), inner));
    let l2 = factor.mul(&k_double_prime(omega, inner)?).truncate(order);
    Ok([l1.eq_to_order(&r1, order)?, l2.eq_to_order(&r2, order)?])
}
