//! Identity cases, the checker, and the built-in corpus.

mod corpus;
mod report;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coeff::CycloNumber;
use crate::dsl::{eval, Binding, EvalError, Expr};
use crate::series::{Comparison, Rational, SeriesError};

pub use corpus::{parse_binding, parse_corpus, Entry, StanzaError, DEFAULT_ORDER};
pub use report::{Row, SuiteReport, Tally};

/// Built-in corpus files, by name.
pub const BUILTIN: &[(&str, &str)] = &[
    ("appell.qid", include_str!("../../corpus/appell.qid")),
    ("classical.qid", include_str!("../../corpus/classical.qid")),
    ("theta.qid", include_str!("../../corpus/theta.qid")),
    ("kang.qid", include_str!("../../corpus/kang.qid")),
    ("habc.qid", include_str!("../../corpus/habc.qid")),
    ("explicit.qid", include_str!("../../corpus/explicit.qid")),
    ("controls.qid", include_str!("../../corpus/controls.qid")),
];

/// Every entry of the built-in corpus, in file order.
pub fn builtin_corpus() -> Vec<Entry> {
    BUILTIN.iter().flat_map(|(_, text)| parse_corpus(text)).collect()
}

/// What a case is supposed to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Expect {
    #[default]
    Pass,
    Fail,
    NonGeneric,
}

/// One sample binding with its source text.
#[derive(Debug, Clone)]
pub struct Sample {
    pub label: String,
    pub binding: Binding,
}

#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub samples: Vec<Sample>,
    pub default_order: Rational,
    pub expect: Expect,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NonGeneric,
    InsufficientPrecision,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NonGeneric => "nongeneric",
            Status::InsufficientPrecision => "insufficient_precision",
        }
    }

    /// Whether this outcome is what `expect` asked for.
    pub fn meets(self, expect: Expect) -> bool {
        matches!(
            (self, expect),
            (Status::Pass, Expect::Pass) | (Status::Fail, Expect::Fail) | (Status::NonGeneric, Expect::NonGeneric)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub first_bad_exponent: Option<Rational>,
    pub lhs_coeff: Option<CycloNumber>,
    pub rhs_coeff: Option<CycloNumber>,
    pub order_checked: Rational,
    /// Error text for non-generic or precision verdicts.
    pub message: Option<String>,
}

impl Verdict {
    fn bare(status: Status, order: Rational, message: Option<String>) -> Self {
        Verdict {
            status,
            first_bad_exponent: None,
            lhs_coeff: None,
            rhs_coeff: None,
            order_checked: order,
            message,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Human-readable detail column.
    pub fn detail(&self) -> String {
        let o = fmt_exp(self.order_checked);
        match self.status {
            Status::Pass => format!("agree below q^{o}"),
            Status::Fail => match (&self.first_bad_exponent, &self.lhs_coeff, &self.rhs_coeff) {
                (Some(e), Some(l), Some(r)) => {
                    format!("first difference at q^{}: lhs {l}, rhs {r}", fmt_exp(*e))
                }
                _ => self.message.clone().unwrap_or_default(),
            },
            _ => self.message.clone().unwrap_or_default(),
        }
    }
}

fn fmt_exp(r: Rational) -> String {
    if r.is_integer() && *r.numer() >= 0 {
        r.numer().to_string()
    } else {
        format!("({r})")
    }
}

fn side_error(side: &str, e: EvalError, order: Rational) -> Verdict {
    let msg = format!("{side}: {e}");
    if e.is_nongeneric() {
        Verdict::bare(Status::NonGeneric, order, Some(msg))
    } else if e.is_precision() {
        Verdict::bare(Status::InsufficientPrecision, order, Some(msg))
    } else {
        Verdict::bare(Status::Fail, order, Some(msg))
    }
}

/// Check one sample of `case` at `order`, or at the case's default order.
///
/// # Panics
/// If `sample` is out of range.
pub fn check(case: &IdentityCase, sample: usize, order: Option<Rational>) -> Verdict {
    let order = order.unwrap_or(case.default_order);
    let binding = &case.samples[sample].binding;
    let lhs = match eval(&case.lhs, binding, order) {
        Ok(s) => s,
        Err(e) => return side_error("lhs", e, order),
    };
    let rhs = match eval(&case.rhs, binding, order) {
        Ok(s) => s,
        Err(e) => return side_error("rhs", e, order),
    };
    match lhs.eq_to_order(&rhs, order) {
        Ok(Comparison::Agree { order }) => Verdict::bare(Status::Pass, order, None),
        Ok(Comparison::Differ { exponent, lhs, rhs }) => Verdict {
            status: Status::Fail,
            first_bad_exponent: Some(exponent),
            lhs_coeff: Some(lhs),
            rhs_coeff: Some(rhs),
            order_checked: order,
            message: None,
        },
        Err(e @ SeriesError::InsufficientPrecision { .. }) => {
            Verdict::bare(Status::InsufficientPrecision, order, Some(e.to_string()))
        }
        Err(e) => Verdict::bare(Status::Fail, order, Some(e.to_string())),
    }
}

/// Run every sample of every entry. `order` overrides each case's default;
/// `jobs` of `None` uses all cores.
pub fn run_suite(entries: &[Entry], order: Option<Rational>, jobs: Option<usize>) -> SuiteReport {
    let tasks: Vec<(usize, usize)> = entries
        .iter()
        .enumerate()
        .flat_map(|(i, e)| {
            let n = e.as_ref().map_or(1, |c| c.samples.len());
            (0..n).map(move |s| (i, s))
        })
        .collect();
    let run = |&(i, s): &(usize, usize)| -> Row {
        match &entries[i] {
            Ok(case) => {
                let t = Instant::now();
                let verdict = check(case, s, order);
                Row {
                    id: case.id.clone(),
                    binding: case.samples[s].label.clone(),
                    expect: case.expect,
                    verdict,
                    elapsed: t.elapsed(),
                }
            }
            Err(e) => Row {
                id: e.id.clone(),
                binding: "-".into(),
                expect: Expect::Pass,
                verdict: Verdict::bare(
                    Status::Fail,
                    order.unwrap_or(Rational::from_integer(DEFAULT_ORDER)),
                    Some(format!("corpus error: {e}")),
                ),
                elapsed: Duration::ZERO,
            },
        }
    };
    let rows = match jobs {
        Some(1) => tasks.iter().map(run).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| tasks.par_iter().map(run).collect()),
            Err(_) => tasks.iter().map(run).collect(),
        },
        None => tasks.par_iter().map(run).collect(),
    };
    SuiteReport { rows }
}
