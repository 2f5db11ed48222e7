//! Baxter numbers, their generating function `B(t)`, the watermelon
//! identities linking `B` to osculating stars, and the linear ODE of `B`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::gv::{binomial, osculating_complete_gf, vicious_complete_gf};
use crate::enumerator::{enumerate_dp, Mode, WalkerSystem};
use crate::error::{Error, Result};
use crate::report::{CheckReport, IdentityCheck};
use crate::series::{rat, LaurentPoly2, Rational, TruncSeries};

/// Baxter numbers `b_1..=b_N` and `B(t) = sum b_n t^n` through `t^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaxterSeries {
    /// `b[k]` is `b_{k+1}`.
    pub b: Vec<BigInt>,
    pub series: TruncSeries<Rational>,
}

/// `b_{n+1} = 2/((n+1)(n+2)^2) sum_r C(n+2,r) C(n+2,r+1) C(n+2,r+2)`.
pub fn baxter_number(m: u32) -> BigInt {
    assert!(m >= 1, "Baxter numbers start at b_1");
    let n = i64::from(m) - 1;
    let sum: BigInt = (0..=n)
        .map(|r| binomial(n + 2, r) * binomial(n + 2, r + 1) * binomial(n + 2, r + 2))
        .sum();
    let den = BigInt::from((n + 1) * (n + 2) * (n + 2));
    let twice = sum * 2;
    assert!(BigInt::is_zero(&(&twice % &den)), "Baxter sum is divisible");
    twice / den
}

pub fn baxter_series(order: usize) -> BaxterSeries {
    let b: Vec<BigInt> = (1..=order as u32).map(baxter_number).collect();
    let series = TruncSeries::from_terms(
        b.iter()
            .enumerate()
            .map(|(k, bk)| (k + 1, Rational::from_integer(bk.clone()))),
        order,
    );
    BaxterSeries { b, series }
}

fn poly(coeffs: &[i64], order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_terms(coeffs.iter().enumerate().map(|(n, &c)| (n, rat(c))), order)
}

/// `12t - 6(1-2t)B - 2t(3-14t-8t^2)B' - t^2(1+t)(1-8t)B''` through
/// `t^{N-2}` for a series `B` known through `t^N`.
pub fn ode_residual_of(b: &TruncSeries<Rational>) -> TruncSeries<Rational> {
    let n = b.order();
    assert!(n >= 2, "the ODE residual needs order at least 2");
    let order = n - 2;
    let b1 = b.derivative();
    let b2 = b1.derivative();
    let term0 = poly(&[0, 12], order);
    let term1 = &poly(&[-6, 12], order) * &b.truncate(order);
    let term2 = &poly(&[0, -6, 28, 16], order) * &b1.truncate(order);
    // t^2 (1+t)(1-8t) = t^2 - 7t^3 - 8t^4
    let term3 = &poly(&[0, 0, -1, 7, 8], order) * &b2;
    &(&(&term0 + &term1) + &term2) + &term3
}

/// Residual of the Baxter ODE on `B(t)` from the determinant sum, through
/// `t^{N-2}`.
pub fn baxter_ode_residual(order: usize) -> TruncSeries<Rational> {
    ode_residual_of(&baxter_series(order).series)
}

/// Inverts the watermelon relation `W = (1-t)((1-t)B - t)/(t^2(1+t))`:
/// `B = t^2(1+t)W/(1-t)^2 + t/(1-t)`. A `W` known through `t^M` gives `B`
/// through `t^{M+2}`.
pub fn baxter_from_watermelons(w: &TruncSeries<Rational>) -> TruncSeries<Rational> {
    let order = w.order() + 2;
    let w = TruncSeries::from_coeffs_with_order(w.coeffs().to_vec(), order);
    let one_minus_t = poly(&[1, -1], order);
    let inv = one_minus_t.invert().expect("1 - t is invertible");
    let lead = &(&poly(&[0, 0, 1, 1], order) * &w) * &(&inv * &inv);
    &lead + &(&poly(&[0, 1], order) * &inv)
}

/// The three complete series `O_{0,1}`, `O_{1,0}`, `O_{1,1}` feeding the
/// watermelon identities.
struct Sources {
    label: &'static str,
    o01: TruncSeries<LaurentPoly2>,
    o10: TruncSeries<LaurentPoly2>,
    o11: TruncSeries<LaurentPoly2>,
}

fn enumerated(order: usize) -> Sources {
    let gf = |i, j| {
        enumerate_dp(WalkerSystem::star(i, j, Mode::Osculating), order as u32)
            .complete_gf()
            .expect("three walkers")
    };
    Sources {
        label: "enumerator",
        o01: gf(0, 1),
        o10: gf(1, 0),
        o11: gf(1, 1),
    }
}

fn from_determinants(order: usize) -> Result<Sources> {
    Ok(Sources {
        label: "determinants",
        o01: osculating_complete_gf(0, 1, order)?,
        o10: osculating_complete_gf(1, 0, order)?,
        o11: osculating_complete_gf(1, 1, order)?,
    })
}

fn check_sources(rep: &mut CheckReport, src: &Sources, bax: &BaxterSeries) -> Result<()> {
    let order = bax.series.order();
    let tag = src.label;
    let t = TruncSeries::<Rational>::t(order);
    let one_plus_t = poly(&[1, 1], order);
    let inv_1pt = one_plus_t.invert()?;
    let b = &bax.series;

    let o01_10 = src.o01.xy_coeff(1, 0);
    let o10_10 = src.o10.xy_coeff(1, 0);
    let o11_10 = src.o11.xy_coeff(1, 0);
    let o11_01 = src.o11.xy_coeff(0, 1);
    let o11_11 = src.o11.xy_coeff(1, 1);

    rep.push(IdentityCheck::equal(
        format!("[x^1y^0]O01 = B/(1+t) ({tag})"),
        &o01_10,
        &(b * &inv_1pt),
    ));
    rep.push(IdentityCheck::equal(
        format!("[x^1y^0]O10 - 1/(1+t) = [x^1y^0]O01 ({tag})"),
        &(&o10_10 - &inv_1pt),
        &o01_10,
    ));

    // Alternating sums of Baxter numbers, coefficient by coefficient.
    let mut mismatch = None;
    let mut mismatch_c = None;
    for n in 0..=order {
        let alt: BigInt = (1..=n)
            .map(|k| {
                let bk = bax.b[k - 1].clone();
                if (n - k) % 2 == 0 {
                    bk
                } else {
                    -bk
                }
            })
            .sum();
        let alt = Rational::from_integer(alt);
        let got = o01_10.coeff(n);
        if mismatch.is_none() && *got != alt {
            mismatch = Some((n, got - &alt));
        }
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        let diff = o10_10.coeff(n) - got - sign;
        if mismatch_c.is_none() && diff != rat(0) {
            mismatch_c = Some((n, diff));
        }
    }
    rep.push(IdentityCheck::scalar(
        format!("o01(n) = sum_k (-1)^(n-k) b_k ({tag})"),
        order,
        mismatch,
    ));
    rep.push(IdentityCheck::scalar(
        format!("o10(n) = o01(n) + (-1)^n ({tag})"),
        order,
        mismatch_c,
    ));

    rep.push(IdentityCheck::equal(
        format!("first steps: [x^1y^0]O01 = t[x^1y^0]O10 + t[x^1y^0]O11 ({tag})"),
        &o01_10,
        &(&(&t * &o10_10) + &(&t * &o11_10)),
    ));
    rep.push(IdentityCheck::equal(
        format!("last steps: [x^1y^0]O11 = t[x^0y^1]O11 + t[x^1y^1]O11 ({tag})"),
        &o11_10,
        &(&(&t * &o11_01) + &(&t * &o11_11)),
    ));
    rep.push(IdentityCheck::equal(
        format!("symmetry [x^0y^1]O11 = [x^1y^0]O11 ({tag})"),
        &o11_01,
        &o11_10,
    ));

    let one_minus_t = poly(&[1, -1], order);
    let core = &(&one_minus_t * b) - &t;
    let x1y0 = core.divide_by_t_power(1)?.mul_rational(&inv_1pt);
    rep.push(IdentityCheck::equal(
        format!("[x^1y^0]O11 = ((1-t)B - t)/(t(1+t)) ({tag})"),
        &o11_10,
        &x1y0,
    ));
    let melon = (&one_minus_t * &core)
        .divide_by_t_power(2)?
        .mul_rational(&inv_1pt);
    rep.push(IdentityCheck::equal(
        format!("[x^1y^1]O11 = (1-t)((1-t)B - t)/(t^2(1+t)) ({tag})"),
        &o11_11,
        &melon,
    ));
    Ok(())
}

/// Baxter numbers against the watermelon coefficients of `V_{1,1}`, and the
/// identities for `[x^1y^0]O_{0,1}`, `[x^1y^0]O_{1,0}`, `[x^1y^0]O_{1,1}`,
/// `[x^1y^1]O_{1,1}` through `t^N`, each with the osculating series taken
/// both from the enumerator and from the determinant formula.
pub fn baxter_identities(order: usize) -> Result<CheckReport> {
    if order < 2 {
        return Err(Error::Invalid("Baxter identities need order >= 2".into()));
    }
    let bax = baxter_series(order);
    let mut rep = CheckReport::new("baxter", None, order);

    let v11 = vicious_complete_gf(1, 1, order - 1);
    let mut mismatch = None;
    for (k, bk) in bax.b.iter().enumerate() {
        if k > order - 1 {
            break;
        }
        let melon = v11.coeff(k).coeff([1, 1]);
        let bk = Rational::from_integer(bk.clone());
        if melon != bk {
            mismatch = Some((k, melon - bk));
            break;
        }
    }
    rep.push(IdentityCheck::scalar(
        "b_(n+1) = [t^n xy]V11",
        order - 1,
        mismatch,
    ));
    let positive = bax.b.iter().all(|b| *b > BigInt::zero());
    rep.push(IdentityCheck::holds(
        "b_n are positive integers",
        order,
        positive,
    ));

    check_sources(&mut rep, &enumerated(order), &bax)?;
    check_sources(&mut rep, &from_determinants(order)?, &bax)?;
    Ok(rep)
}

/// The Baxter ODE on `B(t)`, its sensitivity to a perturbed coefficient, and
/// the ODE implied for osculating watermelons `[x^1y^1]O_{1,1}`.
pub fn baxter_ode_report(order: usize) -> Result<CheckReport> {
    if order < 4 {
        return Err(Error::Invalid("the ODE check needs order >= 4".into()));
    }
    let mut rep = CheckReport::new("ode", None, order);
    let bax = baxter_series(order);
    rep.push(IdentityCheck::residual(
        "Baxter ODE on B(t)",
        &ode_residual_of(&bax.series),
    ));

    let mut bumped = bax.series.coeffs().to_vec();
    bumped[2] += rat(1);
    let bumped = TruncSeries::from_coeffs(bumped);
    rep.push(IdentityCheck::holds(
        "perturbing b_2 breaks the ODE",
        order - 2,
        !ode_residual_of(&bumped).is_zero(),
    ));

    let melon_order = order - 2;
    let melons = enumerate_dp(
        WalkerSystem::star(1, 1, Mode::Osculating),
        melon_order as u32,
    )
    .complete_gf()?
    .xy_coeff(1, 1);
    let implied = baxter_from_watermelons(&melons);
    rep.push(IdentityCheck::residual(
        "Baxter ODE through osculating watermelons",
        &ode_residual_of(&implied),
    ));
    rep.push(IdentityCheck::equal(
        "B(t) recovered from osculating watermelons",
        &implied,
        &bax.series,
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_baxter_numbers() {
        let b: Vec<i64> = baxter_series(6)
            .b
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(b, [1, 2, 6, 22, 92, 422]);
    }

    #[test]
    fn ode_vanishes() {
        assert!(baxter_ode_residual(30).is_zero());
        assert_eq!(baxter_ode_residual(30).order(), 28);
    }

    #[test]
    fn perturbed_b_fails_ode() {
        let mut c = baxter_series(10).series.coeffs().to_vec();
        c[3] += rat(1);
        assert!(!ode_residual_of(&TruncSeries::from_coeffs(c)).is_zero());
    }

    #[test]
    fn identities_hold() {
        let rep = baxter_identities(8).unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn ode_report_passes() {
        let rep = baxter_ode_report(12).unwrap();
        assert!(rep.passed, "{rep}");
    }
}
