//! Machine-readable verification results.
//!
//! A [`CheckReport`] groups the identities exercised by one named check;
//! each [`IdentityCheck`] records whether its residual vanished and, if
//! not, the first nonzero coefficient with its full multi-index.

use std::fmt;

use serde::Serialize;

use crate::series::{fmt_rational, Rational, Ring, TruncSeries};

/// Position and value of the first nonzero residual coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub t_power: usize,
    pub x_exp: Option<i32>,
    pub y_exp: Option<i32>,
    pub u_deg: Option<u32>,
    pub value: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.t_power)?;
        if let Some(e) = self.x_exp {
            write!(f, " x^{e}")?;
        }
        if let Some(e) = self.y_exp {
            write!(f, " y^{e}")?;
        }
        if let Some(e) = self.u_deg {
            write!(f, " u^{e}")?;
        }
        write!(f, " = {}", self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub order_checked: usize,
    pub residual_zero: bool,
    pub first_nonzero: Option<Failure>,
}

impl IdentityCheck {
    /// Records `residual == 0` through its order.
    pub fn residual<C: Ring>(identity: impl Into<String>, residual: &TruncSeries<C>) -> Self {
        let first = residual.first_nonzero().map(|(n, m, r)| Failure {
            t_power: n,
            x_exp: m.x,
            y_exp: m.y,
            u_deg: m.u,
            value: fmt_rational(&r),
        });
        Self {
            identity: identity.into(),
            order_checked: residual.order(),
            residual_zero: first.is_none(),
            first_nonzero: first,
        }
    }

    /// Records `lhs == rhs`, compared through the smaller order.
    pub fn equal<C: Ring>(
        identity: impl Into<String>,
        lhs: &TruncSeries<C>,
        rhs: &TruncSeries<C>,
    ) -> Self {
        Self::residual(identity, &(lhs - rhs))
    }

    /// Records an exact scalar comparison indexed by `t_power`
    /// (e.g. counts of length `n`). `mismatch` carries the first difference.
    pub fn scalar(
        identity: impl Into<String>,
        order_checked: usize,
        mismatch: Option<(usize, Rational)>,
    ) -> Self {
        let first = mismatch.map(|(n, r)| Failure {
            t_power: n,
            x_exp: None,
            y_exp: None,
            u_deg: None,
            value: fmt_rational(&r),
        });
        Self {
            identity: identity.into(),
            order_checked,
            residual_zero: first.is_none(),
            first_nonzero: first,
        }
    }

    /// Records a structural property with no coefficient to point at.
    pub fn holds(identity: impl Into<String>, order_checked: usize, ok: bool) -> Self {
        Self {
            identity: identity.into(),
            order_checked,
            residual_zero: ok,
            first_nonzero: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub i: Option<u32>,
    pub j: Option<u32>,
    pub order: usize,
    pub passed: bool,
    pub first_failure: Option<Failure>,
    pub identities: Vec<IdentityCheck>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, start: Option<(u32, u32)>, order: usize) -> Self {
        Self {
            check_name: check_name.into(),
            i: start.map(|s| s.0),
            j: start.map(|s| s.1),
            order,
            passed: true,
            first_failure: None,
            identities: Vec::new(),
        }
    }

    pub fn push(&mut self, check: IdentityCheck) {
        if !check.residual_zero {
            if self.passed {
                self.first_failure = check.first_nonzero.clone();
            }
            self.passed = false;
        }
        self.identities.push(check);
    }

    /// Identities that did not hold.
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identities.iter().filter(|c| !c.residual_zero)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.check_name)?;
        if let (Some(i), Some(j)) = (self.i, self.j) {
            write!(f, " ({i},{j})")?;
        } else if let Some(i) = self.i {
            write!(f, " ({i})")?;
        }
        write!(
            f,
            " order {}: {} identities",
            self.order,
            self.identities.len()
        )?;
        for bad in self.failures() {
            write!(f, "\n  failed: {}", bad.identity)?;
            if let Some(at) = &bad.first_nonzero {
                write!(f, " [first nonzero {at}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int_series, poly2, LaurentPoly2};

    #[test]
    fn zero_residual_passes() {
        let r = IdentityCheck::residual("zero", &int_series(&[0, 0, 0]));
        assert!(r.residual_zero);
        assert_eq!(r.order_checked, 2);
    }

    #[test]
    fn first_failure_carries_multi_index() {
        let s: TruncSeries<LaurentPoly2> =
            TruncSeries::from_coeffs(vec![LaurentPoly2::default(), poly2(&[((2, -1), 3)])]);
        let mut rep = CheckReport::new("demo", Some((1, 1)), 1);
        rep.push(IdentityCheck::residual("bad", &s));
        assert!(!rep.passed);
        let f = rep.first_failure.clone().unwrap();
        assert_eq!(
            (f.t_power, f.x_exp, f.y_exp, f.u_deg),
            (1, Some(2), Some(-1), None)
        );
        assert_eq!(f.value, "3");
        let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(json["first_failure"]["x_exp"], 2);
        assert_eq!(json["passed"], false);
    }
}
