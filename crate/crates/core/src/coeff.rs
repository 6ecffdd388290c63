//! Exact arithmetic in cyclotomic fields Q(ζ_M).
//!
//! An element of Q(ζ_M) is stored as an integer polynomial in ζ_M of degree
//! below φ(M), reduced modulo the cyclotomic polynomial Φ_M, together with a
//! single positive common denominator. The pair is kept in lowest terms, so
//! equality of elements of the same field is equality of the stored vectors.
//!
//! All roots of unity used by the series code (ζ_c, i = ζ_4, ζ_{2c}) and the
//! trigonometric constants sin(πa/c), csc(πa/c) live here.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("field order mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u32 },
    #[error("cannot lift from Q(zeta_{from}) to Q(zeta_{to}): {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("field order must be positive")]
    ZeroOrder,
    #[error("sin(pi*{a}/{c}) requires 0 < a < c")]
    InvalidAngle { a: i64, c: i64 },
    #[error("Q(zeta_{order}) does not contain sin(pi*a/{c}); order must be divisible by {needed}")]
    FieldTooSmall { order: u32, c: i64, needed: u32 },
}

/// The field Q(ζ_M): its order and the monic cyclotomic polynomial Φ_M.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Coefficients of Φ_M, lowest degree first; `phi[degree] == 1`.
    phi: Vec<i64>,
}

impl CycloField {
    /// Shared handle to Q(ζ_M). Fields are built once and cached.
    pub fn get(order: u32) -> Arc<CycloField> {
        assert!(order > 0, "cyclotomic field order must be positive");
        static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let cache = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = cache.read().unwrap().get(&order) {
            return f.clone();
        }
        let field = Arc::new(CycloField {
            order,
            phi: cyclotomic_polynomial(order),
        });
        cache
            .write()
            .unwrap()
            .entry(order)
            .or_insert(field)
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(M), the dimension of Q(ζ_M) over Q.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.phi
    }

    /// Reduce an integer polynomial modulo Φ_M in place; the result has
    /// exactly `degree()` entries.
    fn reduce(&self, poly: &mut Vec<BigInt>) {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = poly.len() - d;
            for (j, &c) in self.phi[..d].iter().enumerate() {
                if c != 0 {
                    poly[base + j] -= &top * c;
                }
            }
        }
        poly.resize(d, BigInt::zero());
    }
}

/// Φ_n computed by dividing x^n − 1 by Φ_d for every proper divisor d of n.
fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut memo: HashMap<u32, Vec<i128>> = HashMap::new();
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    for &d in &divisors {
        let mut p = vec![0i128; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for &e in divisors.iter().filter(|&&e| e < d && d % e == 0) {
            p = exact_div(&p, &memo[&e]);
        }
        memo.insert(d, p);
    }
    memo[&n].iter().map(|&c| c as i64).collect()
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// An exact element of Q(ζ_M).
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({}: {})", self.order(), self)
    }
}

impl CycloNumber {
    pub fn zero(order: u32) -> Self {
        let field = CycloField::get(order);
        let num = vec![BigInt::zero(); field.degree()];
        CycloNumber {
            field,
            num,
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(1, order)
    }

    pub fn from_int(value: i64, order: u32) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(value);
        z
    }

    /// The rational constant `r` embedded in Q(ζ_M).
    pub fn from_rational(r: &BigRational, order: u32) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// Checked embedding: errors on `order == 0` instead of panicking.
    pub fn embed(r: &BigRational, order: u32) -> Result<Self, CycloError> {
        if order == 0 {
            return Err(CycloError::ZeroOrder);
        }
        Ok(Self::from_rational(r, order))
    }

    /// ζ_M^k in canonical form. Depends only on k mod M.
    pub fn zeta_power(order: u32, k: i64) -> Self {
        let field = CycloField::get(order);
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![BigInt::zero(); e.max(field.degree()) + 1];
        poly[e] = BigInt::one();
        field.reduce(&mut poly);
        CycloNumber {
            field,
            num: poly,
            den: BigInt::one(),
        }
    }

    /// Build from rational coefficients of 1, ζ, ζ², …; longer inputs are
    /// reduced modulo Φ_M.
    pub fn from_coeffs(order: u32, coeffs: &[BigRational]) -> Self {
        let field = CycloField::get(order);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut poly: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if poly.len() < field.degree() {
            poly.resize(field.degree(), BigInt::zero());
        }
        field.reduce(&mut poly);
        let mut z = CycloNumber {
            field,
            num: poly,
            den,
        };
        z.normalize();
        z
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Rational coefficients with respect to the power basis 1, ζ_M, …, ζ_M^{φ(M)−1}.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order
    }

    /// Field addition; both operands must share the field order.
    pub fn checked_add(&self, other: &Self) -> Result<Self, CycloError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self.add_same(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycloError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self.add_same(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycloError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self.mul_same(other))
    }

    fn mismatch(&self, other: &Self) -> CycloError {
        CycloError::OrderMismatch {
            left: self.order(),
            right: other.order(),
        }
    }

    fn add_same(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let (num, den) = if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a * &other.den + b * &self.den)
                .collect();
            (num, &self.den * &other.den)
        };
        let mut r = CycloNumber {
            field: self.field.clone(),
            num,
            den,
        };
        r.normalize();
        r
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order());
        }
        let d = self.field.degree();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&mut prod);
        let mut r = CycloNumber {
            field: self.field.clone(),
            num: prod,
            den: &self.den * &other.den,
        };
        r.normalize();
        r
    }

    fn neg_ref(&self) -> Self {
        CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> Self {
        let mut z = CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        z.normalize();
        z
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_M.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero {
                order: self.order(),
            });
        }
        if self.is_rational() {
            let r = BigRational::new(self.den.clone(), self.num[0].clone());
            return Ok(Self::from_rational(&r, self.order()));
        }
        let phi: Vec<BigRational> = self
            .field
            .phi
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a: Vec<BigRational> = self.coeffs();
        // invariant: s_i * a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (qpoly::trim(phi), qpoly::trim(a));
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qpoly::divrem(&r0, &r1);
            let s = qpoly::sub(&s0, &qpoly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since Φ_M is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
        Ok(Self::from_coeffs(self.order(), &inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Result<Self, CycloError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_same(&sq);
            }
        }
        Ok(acc)
    }

    /// The same element of Q(ζ_{M′}), using ζ_M = ζ_{M′}^{M′/M}.
    pub fn lift_order(&self, target: u32) -> Result<Self, CycloError> {
        let m = self.order();
        if target == 0 || !target.is_multiple_of(m) {
            return Err(CycloError::NotDivisible {
                from: m,
                to: target,
            });
        }
        if target == m {
            return Ok(self.clone());
        }
        let step = (target / m) as usize;
        let field = CycloField::get(target);
        let top = (self.num.len() - 1) * step;
        let mut poly = vec![BigInt::zero(); (top + 1).max(field.degree())];
        for (i, c) in self.num.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        field.reduce(&mut poly);
        let mut r = CycloNumber {
            field,
            num: poly,
            den: self.den.clone(),
        };
        r.normalize();
        Ok(r)
    }

    /// Lift both operands to Q(ζ_lcm).
    pub fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.same_field(b) {
            return (a.clone(), b.clone());
        }
        let l = a.order().lcm(&b.order());
        (a.lift_order(l).unwrap(), b.lift_order(l).unwrap())
    }

    /// The Galois automorphism ζ_M ↦ ζ_M^k, for k coprime to M.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.order() as i64;
        assert_eq!(k.gcd(&m), 1, "galois exponent must be coprime to the order");
        let mut acc = Self::zero(self.order());
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::zeta_power(self.order(), k * i as i64)
                .scale(&BigRational::new(c.clone(), self.den.clone()));
            acc = acc.add_same(&term);
        }
        acc
    }

    /// Complex conjugation, ζ ↦ ζ^{−1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.same_field(other) {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::unify(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycloNumber {}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    /// Operands of different orders are lifted to Q(ζ_lcm) first.
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        if self.same_field(rhs) {
            self.add_same(rhs)
        } else {
            let (a, b) = CycloNumber::unify(self, rhs);
            a.add_same(&b)
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &rhs.neg_ref()
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.same_field(rhs) {
            self.mul_same(rhs)
        } else {
            let (a, b) = CycloNumber::unify(self, rhs);
            a.mul_same(&b)
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.neg_ref()
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.neg_ref()
    }
}

/// Prints as a polynomial in `z<M>`, highest power first, e.g. `z12^4 - 1/2`.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.order();
        let mut first = true;
        for (k, c) in self.num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let mag = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn check_trig_args(a: i64, c: i64, order: u32) -> Result<(), CycloError> {
    if !(0 < a && a < c) {
        return Err(CycloError::InvalidAngle { a, c });
    }
    let needed = 4u32.lcm(&(2 * c as u32));
    if !order.is_multiple_of(needed) {
        return Err(CycloError::FieldTooSmall { order, c, needed });
    }
    Ok(())
}

/// sin(πa/c) = (ζ_{2c}^a − ζ_{2c}^{−a})/(2i), exactly, in Q(ζ_M).
pub fn sin_pi(a: i64, c: i64, order: u32) -> Result<CycloNumber, CycloError> {
    check_trig_args(a, c, order)?;
    let step = order as i64 / (2 * c);
    let diff = &CycloNumber::zeta_power(order, a * step) - &CycloNumber::zeta_power(order, -a * step);
    // 1/(2i) = -i/2
    let minus_i_half = CycloNumber::zeta_power(order, 3 * order as i64 / 4)
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    Ok(&diff * &minus_i_half)
}

/// csc(πa/c) = 1/sin(πa/c) in Q(ζ_M).
pub fn csc_pi(a: i64, c: i64, order: u32) -> Result<CycloNumber, CycloError> {
    sin_pi(a, c, order)?.inv()
}

/// Dense polynomials over Q, lowest degree first, no trailing zeros.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    pub fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                match b.get(i) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        if rem.len() < b.len() {
            return (Vec::new(), trim(rem));
        }
        let lead = b.last().unwrap();
        let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + b.len() - 1] / lead;
            if !c.is_zero() {
                for (j, y) in b.iter().enumerate() {
                    rem[i + j] -= &c * y;
                }
            }
            quot[i] = c;
        }
        rem.truncate(b.len() - 1);
        (trim(quot), trim(rem))
    }
}
