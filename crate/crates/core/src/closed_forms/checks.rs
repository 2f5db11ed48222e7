//! Closed forms compared with the enumerator.

use num_bigint::BigInt;
use num_traits::Zero;

use super::gv::{binomial, gv_determinant, osculating_complete_gf, vicious_complete_gf};
use super::length::{
    osculating_11_quotient, osculating_length_forms, osculating_length_gf, osculation_refined_gf,
    vicious_length_gf,
};
use crate::enumerator::{enumerate_dp, enumerate_dp_with, DpOptions, GapState, Mode, WalkerSystem};
use crate::error::{reject_zero_zero, Result};
use crate::report::{CheckReport, IdentityCheck};
use crate::series::{rat, solve_t, Rational, TruncSeries};

fn osculating(i: u32, j: u32, order: usize) -> crate::enumerator::CountTable {
    enumerate_dp(WalkerSystem::star(i, j, Mode::Osculating), order as u32)
}

/// Osculating and vicious length series against enumerated totals.
pub fn check_prop1(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let mut rep = CheckReport::new("prop1", Some((i, j)), order);
    let (first, second) = osculating_length_forms(i, j, order)?;
    rep.push(IdentityCheck::equal(
        "the two T-forms agree",
        &first,
        &second,
    ));
    let closed = osculating_length_gf(i, j, order)?;
    let counted = osculating(i, j, order).length_series();
    rep.push(IdentityCheck::equal(
        "osculating length series = enumeration",
        &closed,
        &counted,
    ));
    if (i, j) == (1, 1) {
        rep.push(IdentityCheck::equal(
            "O11(1,1) = explicit algebraic quotient",
            &closed,
            &osculating_11_quotient(order)?,
        ));
    }

    let vicious = vicious_length_gf(i, j, order);
    let counted =
        enumerate_dp(WalkerSystem::star(i, j, Mode::Vicious), order as u32).length_series();
    rep.push(IdentityCheck::equal(
        "(1-T^i)(1-T^j)/(1-8t) = vicious enumeration",
        &vicious,
        &counted,
    ));
    if (i, j) == (1, 1) {
        let formula = TruncSeries::from_terms(
            (0..=order).map(|n| {
                let n = n as i64;
                let c = BigInt::from(2).pow(n as u32) * binomial(2 * n + 2, n + 1);
                (n as usize, Rational::new(c, BigInt::from(n + 2)))
            }),
            order,
        );
        rep.push(IdentityCheck::equal(
            "V11 coefficients 2^n/(n+2) C(2n+2,n+1)",
            &vicious,
            &formula,
        ));
        let t_over = solve_t(order + 1)
            .divide_by_t_power(1)?
            .scale(&crate::series::ratio(1, 2));
        rep.push(IdentityCheck::equal("V11(1,1) = T/(2t)", &vicious, &t_over));
    }
    Ok(rep)
}

/// Length series with osculations marked, against the enumerated histogram.
pub fn check_prop3(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("prop3", Some((i, j)), order);
    let refined = osculation_refined_gf(i, j, order)?;
    let table = osculating(i, j, order);
    rep.push(IdentityCheck::equal(
        "u-refined length series = osculation histogram",
        &refined,
        &table.length_series_u(),
    ));
    rep.push(IdentityCheck::equal(
        "u = 1 gives the unrefined series",
        &refined.eval_u(&rat(1)),
        &osculating_length_gf(i, j, order)?,
    ));
    rep.push(IdentityCheck::equal(
        "u = 0 counts osculation-free stars",
        &refined.eval_u(&rat(0)),
        &table.with_osculations(0).length_series(),
    ));
    Ok(rep)
}

/// Binomial determinants against fixed-endpoint vicious counts.
pub fn check_gv(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    crate::error::require_positive(i, j)?;
    let mut rep = CheckReport::new("gv", Some((i, j)), order);
    let table = enumerate_dp_with(
        WalkerSystem::star(i, j, Mode::Vicious),
        order as u32,
        DpOptions {
            positioned: true,
            parallel: false,
        },
    );
    let mut mismatch = None;
    let mut negative = false;
    let mut entries = 0usize;
    'outer: for n in 0..=order as u32 {
        for k in 0..=i + n {
            for l in 0..=j + n {
                for r in 0..=n {
                    let det = gv_determinant(i, j, k, l, r, n);
                    negative |= det < BigInt::zero();
                    let counted: BigInt = table
                        .iter()
                        .filter(|(key, _)| {
                            key.n == n && key.gaps == GapState::pair(k, l) && key.anchor == Some(r)
                        })
                        .map(|(_, c)| BigInt::from(c.clone()))
                        .sum();
                    entries += 1;
                    if det != counted {
                        mismatch = Some((n as usize, Rational::from_integer(det - counted)));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.push(IdentityCheck::scalar(
        format!("determinant = fixed-endpoint vicious count ({entries} cells)"),
        order,
        mismatch,
    ));
    rep.push(IdentityCheck::holds(
        "determinants are nonnegative",
        order,
        !negative,
    ));
    let complete = vicious_complete_gf(i, j, order);
    rep.push(IdentityCheck::equal(
        "summed determinants = vicious length series",
        &complete.eval_xy_one(),
        &vicious_length_gf(i, j, order),
    ));
    Ok(rep)
}

/// Complete generating functions from determinants against the enumerator.
pub fn check_prop2_closed_form(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let mut rep = CheckReport::new("complete-gf", Some((i, j)), order);
    let closed = osculating_complete_gf(i, j, order)?;
    let counted = osculating(i, j, order).complete_gf()?;
    rep.push(IdentityCheck::equal(
        "osculating complete GF from determinants = enumeration",
        &closed,
        &counted,
    ));
    rep.push(IdentityCheck::equal(
        "complete GF at x = y = 1 = length series",
        &closed.eval_xy_one(),
        &osculating_length_gf(i, j, order)?,
    ));
    let vicious =
        enumerate_dp(WalkerSystem::star(i, j, Mode::Vicious), order as u32).complete_gf()?;
    rep.push(IdentityCheck::equal(
        "vicious complete GF from determinants = enumeration",
        &vicious_complete_gf(i, j, order),
        &vicious,
    ));
    Ok(rep)
}
