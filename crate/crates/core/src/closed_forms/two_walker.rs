//! Two walkers: the kernel `1 - t(1+x)(1+1/x)`, its root `X`, and the
//! identities tying osculating, vicious and quasi-vicious pairs together.

use crate::enumerator::{enumerate_dp, Mode, WalkerSystem};
use crate::error::Result;
use crate::report::{CheckReport, IdentityCheck};
use crate::series::{
    rat, solve_x, Laurent, LaurentPoly1, LaurentPoly1U, Rational, TruncSeries, UPoly,
};

/// `X = (1 - 2t - sqrt(1-4t)) / (2t)` through `t^order`.
pub fn x_radical(order: usize) -> Result<TruncSeries<Rational>> {
    let ext = order + 1;
    let root = TruncSeries::from_terms([(0, rat(1)), (1, rat(-4))], ext).sqrt()?;
    let num = &TruncSeries::from_terms([(0, rat(1)), (1, rat(-2))], ext) - &root;
    Ok(num.divide_by_t_power(1)?.scale(&crate::series::ratio(1, 2)))
}

fn up(coeffs: &[i64]) -> UPoly {
    UPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
}

fn lu(terms: &[(i32, UPoly)]) -> LaurentPoly1U {
    Laurent::from_terms(terms.iter().cloned())
}

/// Series in `t` given by its first few Laurent coefficients.
fn tpoly(coeffs: Vec<LaurentPoly1U>, order: usize) -> TruncSeries<LaurentPoly1U> {
    TruncSeries::from_terms(coeffs.into_iter().enumerate(), order)
}

fn constants(s: &TruncSeries<UPoly>) -> TruncSeries<LaurentPoly1U> {
    s.map(|c| Laurent::constant(c.clone()))
}

fn complete(mode: Mode, i: u32, order: usize) -> TruncSeries<LaurentPoly1> {
    enumerate_dp(WalkerSystem::two(i, mode), order as u32)
        .complete_gf_two()
        .expect("two walkers")
}

/// Every two-walker identity, with all series taken from the `p = 2`
/// enumerator and `X` from its fixed-point equation.
pub fn two_walker_suite(i: u32, order: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("two-walker", Some((i, i)), order);
    rep.i = Some(i);
    rep.j = None;
    let n = order;

    let x_ser = solve_x(n);
    rep.push(IdentityCheck::equal(
        "X = (1-2t-sqrt(1-4t))/(2t)",
        &x_ser,
        &x_radical(n)?,
    ));
    let t = TruncSeries::<Rational>::t(n);
    let one = TruncSeries::<Rational>::one(n);
    let one_plus_x = &one + &x_ser;
    rep.push(IdentityCheck::equal(
        "X = t(1+X)^2",
        &x_ser,
        &(&t * &(&one_plus_x * &one_plus_x)),
    ));

    let xu: TruncSeries<UPoly> = x_ser.lift();
    let tu: TruncSeries<UPoly> = t.lift();
    let u = TruncSeries::constant(UPoly::u(), n);
    let one_u = TruncSeries::<UPoly>::one(n);
    let xi = xu.pow(i);
    let one_minus_tux = &one_u - &(&(&tu * &u) * &xu);
    let lhs =
        &one_minus_tux * &(&(&(&one_u - &u) + &(&tu * &u).scale(&rat(2))) + &(&(&tu * &u) * &xu));
    let ut1 = &one_u + &(&u * &tu);
    let rhs = &(&ut1 * &ut1) - &u;
    rep.push(IdentityCheck::equal(
        "(1-tuX)(1-u+2tu+tuX) = (1+ut)^2 - u",
        &lhs,
        &rhs,
    ));

    let osc = enumerate_dp(WalkerSystem::two(i, Mode::Osculating), n as u32).complete_gf_two_u()?;
    let vic_i: TruncSeries<LaurentPoly1U> = complete(Mode::Vicious, i, n).lift();
    let vic_next: TruncSeries<LaurentPoly1U> = complete(Mode::Vicious, i + 1, n).lift();
    let qv: TruncSeries<LaurentPoly1U> = complete(Mode::QuasiVicious, i, n).lift();
    let osc0 = osc.constant_part();
    let qv0 = qv.constant_part();

    let kernel = tpoly(
        vec![
            lu(&[(0, up(&[1]))]),
            lu(&[(-1, up(&[-1])), (0, up(&[-2])), (1, up(&[-1]))]),
        ],
        n,
    );
    let x_i = TruncSeries::constant(lu(&[(i as i32, up(&[1]))]), n);
    let boundary = tpoly(
        vec![
            LaurentPoly1U::new(),
            lu(&[(-1, up(&[1])), (0, up(&[2])), (1, up(&[1, -1]))]),
        ],
        n,
    );
    rep.push(IdentityCheck::equal(
        "(1-t(2+x+1/x))O = x^i - t(2+1/x+x(1-u))O(0)",
        &(&kernel * &osc),
        &(&x_i - &(&boundary * &osc0)),
    ));
    rep.push(IdentityCheck::equal("V = W - W(0)", &vic_i, &(&qv - &qv0)));
    rep.push(IdentityCheck::equal(
        "(1-t(2+x+1/x))V = x^i - W(0)",
        &(&kernel * &vic_i),
        &(&x_i - &qv0),
    ));
    rep.push(IdentityCheck::equal("W(0) = X^i", &qv0.eval_at_one(), &xi));
    let osc0_u = osc0.eval_at_one();
    rep.push(IdentityCheck::equal(
        "O(0) = X^i/(1-tuX)",
        &osc0_u,
        &(&xi * &one_minus_tux.invert()?),
    ));
    let xu1 = &one_u + &xu;
    let cleared = &tu * &(&(&xu1 * &xu1) - &(&u * &(&xu * &xu)));
    rep.push(IdentityCheck::equal(
        "X^(i+1) = O(0) t((1+X)^2 - uX^2)",
        &xu.pow(i + 1),
        &(&osc0_u * &cleared),
    ));

    let one_minus_4t: TruncSeries<UPoly> =
        TruncSeries::from_terms([(0, rat(1)), (1, rat(-4))], n).lift();
    let four_minus_u = &TruncSeries::constant(UPoly::constant(rat(4)), n) - &u;
    let len_osc = &one_minus_4t * &osc.eval_at_one();
    rep.push(IdentityCheck::equal(
        "(1-4t)O(1) = 1 - (4-u)tX^i/(1-tuX)",
        &len_osc,
        &(&one_u - &(&(&four_minus_u * &tu) * &(&xi * &one_minus_tux.invert()?))),
    ));
    let len_vic = &one_minus_4t * &vic_i.eval_at_one();
    rep.push(IdentityCheck::equal(
        "(1-4t)V(1) = 1 - X^i",
        &len_vic,
        &(&one_u - &xi),
    ));

    // ((1+ut)^2 - u) O_i(x) = x^i(1-u+2tu+xtu(1-u)) + t(1/x + 2 + x(1-u))((1-u+2tu)V_i + tuV_{i+1})
    let ii = i as i32;
    let lead = constants(&rhs);
    let start = tpoly(
        vec![
            lu(&[(ii, up(&[1, -1]))]),
            lu(&[(ii, up(&[0, 2])), (ii + 1, up(&[0, 1, -1]))]),
        ],
        n,
    );
    let weight_i = tpoly(vec![lu(&[(0, up(&[1, -1]))]), lu(&[(0, up(&[0, 2]))])], n);
    let weight_next = tpoly(vec![LaurentPoly1U::new(), lu(&[(0, up(&[0, 1]))])], n);
    let vic_mix = &(&weight_i * &vic_i) + &(&weight_next * &vic_next);
    rep.push(IdentityCheck::equal(
        "u-refined osculating/vicious relation",
        &(&lead * &osc),
        &(&start + &(&boundary * &vic_mix)),
    ));

    let osc1 = osc.eval_u(&rat(1));
    let v1 = complete(Mode::Vicious, i, n);
    let v2 = complete(Mode::Vicious, i + 1, n);
    let two_plus_t = TruncSeries::from_terms([(0, Laurent::constant(rat(2)))], n)
        + TruncSeries::from_terms([(1, Laurent::constant(rat(1)))], n);
    let prefactor: TruncSeries<LaurentPoly1> =
        TruncSeries::from_terms([(1, Laurent::from_terms([(-1, rat(1)), (0, rat(2))]))], n);
    let two_xi = TruncSeries::constant(Laurent::monomial(ii, rat(2)), n);
    rep.push(IdentityCheck::equal(
        "(2+t)O = 2x^i + t(1+2x)/x (2V_i + V_(i+1))",
        &(&two_plus_t * &osc1),
        &(&two_xi + &(&prefactor * &(&v1.scale(&rat(2)) + &v2))),
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int_series;

    #[test]
    fn x_is_shifted_catalan() {
        assert_eq!(x_radical(4).unwrap(), int_series(&[0, 1, 2, 5, 14]));
    }

    #[test]
    fn suite_passes_small() {
        for i in 0..3 {
            let rep = two_walker_suite(i, 10).unwrap();
            assert!(rep.passed, "{rep}");
        }
    }
}
