#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use lerch::coeff::{CycloField, CycloNumber};
use lerch::dsl::{parse, BinOp, Expr, Func};
use lerch::series::{geom_inverse, Monomial, QSeries, Rational};

pub const FIELDS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// A random element of Q(ζ_M).
pub fn cyclo_in(m: u32) -> impl Strategy<Value = CycloNumber> {
    let deg = CycloField::get(m).degree();
    prop::collection::vec(small_rational(), deg).prop_map(move |c| CycloNumber::from_coeffs(m, &c))
}

pub fn cyclo() -> impl Strategy<Value = CycloNumber> {
    prop::sample::select(&FIELDS[..]).prop_flat_map(cyclo_in)
}

pub fn nonzero_cyclo() -> impl Strategy<Value = CycloNumber> {
    cyclo().prop_filter("nonzero", |c| !c.is_zero())
}

/// A series on grid 1/D, D ∈ {1, 2, 3}, with exponents in [-2, 6) and
/// precision 6, coefficients in Q(ζ_M) for M ∈ {1, 3, 4}.
pub fn series() -> impl Strategy<Value = QSeries> {
    (1i64..=3, prop::sample::select(vec![1u32, 3, 4])).prop_flat_map(|(d, m)| {
        prop::collection::vec((-2 * d..6 * d, cyclo_in(m)), 0..6).prop_map(move |terms| {
            QSeries::from_terms(
                terms.into_iter().map(|(k, c)| (Rational::new(k, d), c)),
                Rational::from_integer(6),
            )
        })
    })
}

/// A series with a nonzero leading coefficient.
pub fn unit_series() -> impl Strategy<Value = QSeries> {
    (series(), nonzero_cyclo(), -2i64..=2).prop_map(|(s, c, v)| {
        let lead = QSeries::from_terms([(Rational::from_integer(v), c)], Rational::from_integer(6));
        let tail = s.shift(&Monomial::q_int(v + 3)).truncate(Rational::from_integer(6));
        lead.add(&tail)
    })
}

/// `c·q^f` with `f ∈ (-2, 2)` on a grid of 1, 2 or 3.
pub fn monomial() -> impl Strategy<Value = Monomial> {
    (nonzero_cyclo(), -5i64..=5, 1i64..=3)
        .prop_map(|(c, k, d)| Monomial::new(c, Rational::new(k, d)).unwrap())
}

/// Exponents a parser will accept and a printer will reproduce.
fn exponent() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..100).prop_map(Expr::Int),
        Just(Expr::Q),
        Just(Expr::Inf),
        prop::sample::select(vec!["x", "y", "zp", "w0"]).prop_map(|s| Expr::Sym(s.into())),
    ]
}

/// Random expression trees, arity-correct for every function.
pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 40, 5, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]), inner.clone(), inner.clone())
                .prop_map(|(op, a, b)| Expr::Bin(op, Box::new(a), Box::new(b))),
            (inner.clone(), exponent()).prop_map(|(a, r)| Expr::Pow(Box::new(a), r)),
            (prop::sample::select(Func::ALL.to_vec()), prop::collection::vec(inner, 5), 0usize..5).prop_map(
                |(f, mut args, extra)| {
                    let (lo, hi) = f.arity();
                    args.truncate(lo + extra.min(hi - lo));
                    Expr::Call(f, args)
                }
            ),
        ]
    })
}

/// Compare two series below their common precision.
pub fn same(a: &QSeries, b: &QSeries) -> bool {
    let n = a.prec().min(b.prec());
    a.eq_to_order(b, n).map(|c| c.agrees()).unwrap_or(false)
}

pub fn add(a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
    a + b
}

pub fn mul(a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
    a * b
}

#[allow(clippy::eq_op)]
pub fn ring_law(a: &QSeries, b: &QSeries, c: &QSeries) -> Result<(), TestCaseError> {
    prop_assert!(same(&(a + b), &(b + a)));
    prop_assert!(same(&(&(a + b) + c), &(a + &(b + c))));
    prop_assert!(same(&(a * b), &(b * a)));
    prop_assert!(same(&(&(a * b) * c), &(a * &(b * c))));
    prop_assert!(same(&(a * &(b + c)), &(&(a * b) + &(a * c))));
    prop_assert!(same(&(a - a), &QSeries::zero(a.prec())));
    prop_assert!(same(&(a * &QSeries::one(a.prec())), a));
    prop_assert!(same(&(a + &(-a)), &QSeries::zero(a.prec())));
    Ok(())
}

/// `a · a⁻¹ = 1` with the expected loss of precision.
pub fn invert_law(a: &QSeries) -> Result<(), TestCaseError> {
    let n = Rational::from_integer(6);
    let inv = a.invert(n).unwrap();
    let p = a.mul(&inv);
    let v = a.valuation().unwrap();
    prop_assert_eq!(p.prec(), n - v.abs());
    prop_assert!(same(&p, &QSeries::one(p.prec())));
    Ok(())
}

/// `1/(1 − c·q^f)` for `f > 0`, `f = 0`, `f < 0`.
pub fn geom_law(u: &Monomial) -> Result<(), TestCaseError> {
    let n = Rational::from_integer(8);
    let f = u.expo();
    if f.is_zero() && u.coeff().is_one() {
        return Ok(());
    }
    let g = geom_inverse(u, n).unwrap();
    let one_minus_u = QSeries::one(n).sub(&QSeries::from_monomial(u, n));
    prop_assert!(same(&one_minus_u.mul(&g), &QSeries::one(n)));
    let c = u.coeff();
    if f > Rational::zero() {
        prop_assert_eq!(g.valuation(), Some(Rational::zero()));
        prop_assert_eq!(g.coeff(f), c.clone());
        prop_assert_eq!(g.len() as i64, (n / f).ceil().to_integer());
    } else if f.is_zero() {
        prop_assert_eq!(g.len(), 1);
        prop_assert_eq!(g.coeff(Rational::zero()), (&CycloNumber::one(1) - c).inv().unwrap());
    } else {
        prop_assert_eq!(g.valuation(), Some(-f));
        prop_assert_eq!(g.coeff(-f), -c.inv().unwrap());
    }
    Ok(())
}

pub fn round_trip_law(e: &Expr) -> Result<(), TestCaseError> {
    let text = e.to_string();
    prop_assert_eq!(&parse(&text).unwrap(), e, "{}", text);
    Ok(())
}
