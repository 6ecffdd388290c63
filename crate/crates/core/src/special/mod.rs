//! Building blocks: q-Pochhammer symbols, the theta function `j(x; q)` and
//! its `J_{a,m}` specializations, the Appell–Lerch sum `m(x, q, z)`, its
//! splitting formula, and the universal mock theta function `g(x, q)`.
//!
//! Every function takes its base as a positive rational `p`, meaning the
//! nome is `q^p`; arguments are [`Monomial`]s and results are truncated to a
//! requested order in `q`.

mod appell;
mod msplit;
mod pochhammer;
pub(crate) mod sums;
mod theta;
mod universal;

use thiserror::Error;

use crate::coeff::CycloError;
use crate::series::{QSeries, Rational, SeriesError};

pub use appell::{appell_m, m_change_z_correction};
pub use msplit::msplit;
pub use pochhammer::{pochhammer, PochLength};
pub use sums::lambert_bilateral;
pub use theta::{j_m, theta_j, theta_product, theta_quotient, theta_vanishes, theta_J, ThetaSpec};
pub use universal::{g_appell, g_first_form, g_lambert, g_universal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    /// A denominator theta function or binomial factor vanishes.
    #[error("non-generic argument: {0}")]
    NonGeneric(String),
    #[error("term valuations stopped growing after {0} terms")]
    CapExceeded(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("the H(a, 0, c) - H(a, c/2, c) route needs even c, got c = {0}")]
    Parity(i64),
    #[error("could not reach order q^({requested}); best precision q^({reached})")]
    Precision {
        requested: Rational,
        reached: Rational,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

impl QError {
    pub fn is_nongeneric(&self) -> bool {
        matches!(
            self,
            QError::NonGeneric(_)
                | QError::Series(SeriesError::Pole { .. })
                | QError::Series(SeriesError::NotInvertible { .. })
        )
    }
}

/// Run `f` at increasing working orders until its result is known to
/// `q^order`, then truncate. Used for quotients whose precision loss depends
/// on valuations that are only known after expansion.
pub fn deepen<F>(order: Rational, mut f: F) -> Result<QSeries, QError>
where
    F: FnMut(Rational) -> Result<QSeries, QError>,
{
    let mut working = order;
    let mut reached = order;
    for _ in 0..8 {
        let s = f(working)?;
        if s.prec() >= order {
            return Ok(s.truncate(order));
        }
        reached = s.prec();
        working += order - reached + 1;
    }
    Err(QError::Precision {
        requested: order,
        reached,
    })
}
