//! Exact truncated power series and Laurent polynomial arithmetic.
//!
//! Every identity in this crate is checked coefficientwise in one of the
//! rings built here: series in `t` whose coefficients are rationals,
//! Laurent polynomials in `x` (and `y`), or polynomials in the osculation
//! weight `u`.

mod json;
mod laurent;
mod ring;
mod roots;
mod trunc;
mod upoly;

use thiserror::Error;

pub use json::{series_json, series_to_value};
pub use laurent::{
    poly1, poly2, x_pow, xy_pow, Laurent, LaurentPoly1, LaurentPoly1U, LaurentPoly2, LaurentPoly2U,
};
pub use ring::{rat, ratio, rational_parts, Exponent, Multi, Rational, Ring};
pub use roots::{solve_t, solve_x, solve_y0, y0_window};
pub use trunc::{int_poly, int_series, substitute, TruncSeries};
pub use upoly::UPoly;

#[allow(unused_imports)]
pub(crate) use ring::fmt_rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not a unit of the coefficient ring")]
    NonInvertibleConstantTerm,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("coefficient of t^{power} is nonzero; exact division by t-power impossible")]
    NonzeroLowOrderTerm { power: usize },
    #[error("division by t^{needed} needs order at least {needed}, series has order {order}")]
    OrderTooSmall { needed: usize, order: usize },
    #[error("substituted series has a nonzero t^0 term")]
    NonzeroValuation,
    #[error("outer series has negative exponent {exponent} at t^{power}; cannot substitute")]
    NegativeOuterExponent { power: usize, exponent: i32 },
    #[error(
        "coefficient of t^{power} has exponent {exponent} outside the window [-{bound}, {bound}]"
    )]
    WindowExceeded {
        power: usize,
        exponent: i32,
        bound: i32,
    },
}
