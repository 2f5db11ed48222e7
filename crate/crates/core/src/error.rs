use thiserror::Error;

use crate::enumerator::EnumError;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("start ({i},{j}) is not allowed here: {reason}")]
    BadStart {
        i: u32,
        j: u32,
        reason: &'static str,
    },
    #[error("{what}: the two closed forms disagree at t^{power}")]
    FormsDisagree { what: &'static str, power: usize },
    #[error("negative exponent x^{x_exp} y^{y_exp} survived at t^{power}")]
    NegativeExponentSurvived {
        power: usize,
        x_exp: i32,
        y_exp: i32,
    },
    #[error("the x^0 part of the boundary equation is nonzero at t^{power}")]
    NonzeroConstantPart { power: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Message for starts where the osculating formulas do not apply.
pub(crate) const ZERO_ZERO_REASON: &str =
    "osculating star formulas hold only for (i,j) != (0,0); a triple contact has no legal move";

pub(crate) fn reject_zero_zero(i: u32, j: u32) -> Result<()> {
    if i == 0 && j == 0 {
        Err(Error::BadStart {
            i,
            j,
            reason: ZERO_ZERO_REASON,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn require_positive(i: u32, j: u32) -> Result<()> {
    if i == 0 || j == 0 {
        Err(Error::BadStart {
            i,
            j,
            reason: "vicious and quasi-vicious checks need both start gaps >= 1",
        })
    } else {
        Ok(())
    }
}
