//! Closed-form generating functions, evaluated as exact truncated series.

mod baxter;
mod checks;
mod gv;
mod length;
mod two_walker;

use serde::{Deserialize, Serialize};

pub use baxter::{
    baxter_from_watermelons, baxter_identities, baxter_number, baxter_ode_report,
    baxter_ode_residual, baxter_series, ode_residual_of, BaxterSeries,
};
pub use checks::{check_gv, check_prop1, check_prop2_closed_form, check_prop3};
pub use gv::{
    binomial, gv_determinant, osculating_complete_gf, osculating_from_vicious, vicious_complete_gf,
};
pub use length::{
    osculating_11_quotient, osculating_length_forms, osculating_length_gf, osculation_refined_gf,
    vicious_length_gf,
};
pub use two_walker::{two_walker_suite, x_radical};

use crate::error::Result;
use crate::series::{LaurentPoly2, Rational, TruncSeries, UPoly};

/// Which star generating function to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GfVariant {
    OsculatingLength,
    ViciousLength,
    OsculatingRefined,
    CompleteVicious,
    CompleteOsculating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarGfRequest {
    pub i: u32,
    pub j: u32,
    pub order: usize,
    pub variant: GfVariant,
}

/// A generating function in whichever ring its variant lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum StarGf {
    Length(TruncSeries<Rational>),
    Refined(TruncSeries<UPoly>),
    Complete(TruncSeries<LaurentPoly2>),
}

impl StarGfRequest {
    pub fn evaluate(&self) -> Result<StarGf> {
        let (i, j, n) = (self.i, self.j, self.order);
        Ok(match self.variant {
            GfVariant::OsculatingLength => StarGf::Length(osculating_length_gf(i, j, n)?),
            GfVariant::ViciousLength => StarGf::Length(vicious_length_gf(i, j, n)),
            GfVariant::OsculatingRefined => StarGf::Refined(osculation_refined_gf(i, j, n)?),
            GfVariant::CompleteVicious => StarGf::Complete(vicious_complete_gf(i, j, n)),
            GfVariant::CompleteOsculating => StarGf::Complete(osculating_complete_gf(i, j, n)?),
        })
    }
}
