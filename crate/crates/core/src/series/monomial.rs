use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Rational, SeriesError};
use crate::coeff::CycloNumber;

/// A single term `c·q^e` with `c ≠ 0` and rational `e`.
///
/// Every specialized argument (x, z, z′, ω, …) handed to a theta function or
/// Appell–Lerch sum has this shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    coeff: CycloNumber,
    expo: Rational,
}

impl Monomial {
    pub fn new(coeff: CycloNumber, expo: Rational) -> Result<Self, SeriesError> {
        if coeff.is_zero() {
            return Err(SeriesError::ZeroMonomial);
        }
        Ok(Monomial { coeff, expo })
    }

    /// `q^e`.
    pub fn q_pow(expo: Rational) -> Self {
        Monomial {
            coeff: CycloNumber::one(1),
            expo,
        }
    }

    pub fn q_int(expo: i64) -> Self {
        Self::q_pow(Rational::from_integer(expo))
    }

    pub fn constant(coeff: CycloNumber) -> Result<Self, SeriesError> {
        Self::new(coeff, Rational::zero())
    }

    pub fn int(value: i64) -> Self {
        assert!(value != 0, "monomial coefficient must be nonzero");
        Monomial {
            coeff: CycloNumber::from_int(value, 1),
            expo: Rational::zero(),
        }
    }

    pub fn rational(r: &BigRational) -> Result<Self, SeriesError> {
        Self::constant(CycloNumber::from_rational(r, 1))
    }

    /// `ζ_M^k`.
    pub fn zeta(order: u32, k: i64) -> Self {
        Monomial {
            coeff: CycloNumber::zeta_power(order, k),
            expo: Rational::zero(),
        }
    }

    pub fn coeff(&self) -> &CycloNumber {
        &self.coeff
    }

    pub fn expo(&self) -> Rational {
        self.expo
    }

    /// True for `q^e` with coefficient exactly 1.
    pub fn is_pure_power(&self) -> bool {
        self.coeff.is_one()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            expo: self.expo + other.expo,
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            coeff: self.coeff.inv().expect("monomial coefficient is nonzero"),
            expo: -self.expo,
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial {
            coeff: self.coeff.pow(k).expect("monomial coefficient is nonzero"),
            expo: self.expo * k,
        }
    }

    /// Rational power; only defined when the coefficient is 1.
    pub fn pow_rational(&self, e: Rational) -> Result<Monomial, SeriesError> {
        if e.is_integer() {
            return Ok(self.pow(e.to_integer()));
        }
        if !self.coeff.is_one() {
            return Err(SeriesError::FractionalPower);
        }
        Ok(Monomial {
            coeff: self.coeff.clone(),
            expo: self.expo * e,
        })
    }

    pub fn neg(&self) -> Monomial {
        Monomial {
            coeff: -&self.coeff,
            expo: self.expo,
        }
    }

    pub fn scale(&self, c: &CycloNumber) -> Result<Monomial, SeriesError> {
        Monomial::new(&self.coeff * c, self.expo)
    }

    /// `q^e` scaled: returns `self·q^e`.
    pub fn times_q(&self, e: Rational) -> Monomial {
        Monomial {
            coeff: self.coeff.clone(),
            expo: self.expo + e,
        }
    }

    /// `1 − self` has a simple zero: coefficient 1 and exponent 0.
    pub fn is_one(&self) -> bool {
        self.expo.is_zero() && self.coeff.is_one()
    }

    pub fn lcm_denom(&self, d: i64) -> i64 {
        d.lcm(self.expo.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeff.to_string();
        let has_q = !self.expo.is_zero();
        let q = if self.expo.is_one() {
            "q".to_string()
        } else if self.expo.is_integer() && self.expo > Rational::zero() {
            format!("q^{}", self.expo)
        } else {
            format!("q^({})", self.expo)
        };
        match (has_q, self.coeff.is_one()) {
            (false, _) => write!(f, "{c}"),
            (true, true) => write!(f, "{q}"),
            (true, false) if (-&self.coeff).is_one() => write!(f, "-{q}"),
            (true, false) => write!(f, "({c})*{q}"),
        }
    }
}
