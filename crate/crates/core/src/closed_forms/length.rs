//! Length generating functions of osculating and vicious stars, expressed
//! through the series `T = 2t(1+T)^2`.

use crate::error::{reject_zero_zero, Error, Result};
use crate::series::{rat, solve_t, Rational, TruncSeries, UPoly};

fn constant(c: i64, order: usize) -> TruncSeries<Rational> {
    TruncSeries::constant(rat(c), order)
}

/// `1 - 8t`, the common denominator of every length series here.
fn one_minus_8t(order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_terms([(0, rat(1)), (1, rat(-8))], order)
}

/// Both expressions for `(1-8t) O_{i,j}(1,1)`:
///
/// - `1 - 3T^{j+1}/(1+2T) + 3T^{i+j+1}/(2+T) - 3T^{i+1}/(1+2T)`
/// - `1 - 3t/(1+t) (T^j(2+T) - T^{i+j}(1+2T) + T^i(2+T))`
pub fn osculating_length_forms(
    i: u32,
    j: u32,
    order: usize,
) -> Result<(TruncSeries<Rational>, TruncSeries<Rational>)> {
    reject_zero_zero(i, j)?;
    let t_ser = solve_t(order);
    let one = constant(1, order);
    let one_2t = &one + &t_ser.scale(&rat(2));
    let two_t = &constant(2, order) + &t_ser;
    let inv_a = one_2t.invert()?;
    let inv_b = two_t.invert()?;

    let first = &one
        - &(&(&t_ser.pow(j + 1) * &inv_a) - &(&t_ser.pow(i + j + 1) * &inv_b)
            + (&t_ser.pow(i + 1) * &inv_a))
            .scale(&rat(3));

    let t = TruncSeries::t(order);
    let one_plus_t = &one + &t;
    let bracket =
        &(&t_ser.pow(j) * &two_t) - &(&t_ser.pow(i + j) * &one_2t) + (&t_ser.pow(i) * &two_t);
    let second = &one - &(&t.div(&one_plus_t)? * &bracket).scale(&rat(3));
    Ok((first, second))
}

/// Length generating function `O_{i,j}(1,1)` of osculating `(i,j)`-stars.
///
/// Both closed forms are evaluated and must agree coefficientwise.
pub fn osculating_length_gf(i: u32, j: u32, order: usize) -> Result<TruncSeries<Rational>> {
    let (first, second) = osculating_length_forms(i, j, order)?;
    if let Some((power, _, _)) = (&first - &second).first_nonzero() {
        return Err(Error::FormsDisagree {
            what: "osculating length series",
            power,
        });
    }
    Ok(first.div(&one_minus_8t(order))?)
}

/// `(3 - 15t - 4t^2 - 3(1-t)sqrt(1-8t)) / (8t^2(1+t))`, the algebraic
/// closed form of `O_{1,1}(1,1)`.
pub fn osculating_11_quotient(order: usize) -> Result<TruncSeries<Rational>> {
    let ext = order + 2;
    let root = TruncSeries::from_terms([(0, rat(1)), (1, rat(-8))], ext).sqrt()?;
    let one_minus_t = TruncSeries::from_terms([(0, rat(1)), (1, rat(-1))], ext);
    let poly = TruncSeries::from_terms([(0, rat(3)), (1, rat(-15)), (2, rat(-4))], ext);
    let numerator = &poly - &(&one_minus_t * &root).scale(&rat(3));
    let shifted = numerator.divide_by_t_power(2)?;
    let denominator = TruncSeries::from_terms([(0, rat(8)), (1, rat(8))], order);
    Ok(shifted.div(&denominator)?)
}

/// Length generating function of vicious `(i,j)`-stars,
/// `(1-T^i)(1-T^j)/(1-8t)`. Zero when either gap is zero.
pub fn vicious_length_gf(i: u32, j: u32, order: usize) -> TruncSeries<Rational> {
    let t_ser = solve_t(order);
    let one = constant(1, order);
    let num = &(&one - &t_ser.pow(i)) * &(&one - &t_ser.pow(j));
    num.div(&one_minus_8t(order)).expect("1 - 8t is invertible")
}

/// Osculating length series with `u` marking osculations:
///
/// `(1-8t) O = 1 - (4-u)/((1+T)^2 - uT^2) * (T^{j+1} - T^{i+j+1}(2(1+T)-u)/(2(1+T)-uT) + T^{i+1})`.
pub fn osculation_refined_gf(i: u32, j: u32, order: usize) -> Result<TruncSeries<UPoly>> {
    reject_zero_zero(i, j)?;
    let t_ser: TruncSeries<UPoly> = solve_t(order).lift();
    let u = TruncSeries::constant(UPoly::u(), order);
    let one = TruncSeries::<UPoly>::one(order);
    let two = TruncSeries::constant(UPoly::constant(rat(2)), order);
    let four = TruncSeries::constant(UPoly::constant(rat(4)), order);
    let one_plus = &one + &t_ser;
    let t2 = &t_ser * &t_ser;
    let d1 = &(&one_plus * &one_plus) - &(&u * &t2);
    let two_one_plus = &two * &one_plus;
    let d2 = &two_one_plus - &(&u * &t_ser);
    let middle = &(&t_ser.pow(i + j + 1) * &(&two_one_plus - &u)) * &d2.invert()?;
    let inner = &(&t_ser.pow(j + 1) - &middle) + &t_ser.pow(i + 1);
    let rhs = &one - &(&(&(&four - &u) * &d1.invert()?) * &inner);
    let denominator: TruncSeries<UPoly> = one_minus_8t(order).lift();
    Ok(rhs.div(&denominator)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int_series;

    #[test]
    fn one_one_starts_with_one_eight_forty() {
        let s = osculating_length_gf(1, 1, 2).unwrap();
        assert_eq!(s, int_series(&[1, 8, 40]));
    }

    #[test]
    fn zero_one_has_two_first_steps() {
        let s = osculating_length_gf(0, 1, 3).unwrap();
        assert_eq!(s.coeff(0), &rat(1));
        assert_eq!(s.coeff(1), &rat(2));
    }

    #[test]
    fn zero_zero_is_rejected() {
        assert!(matches!(
            osculating_length_gf(0, 0, 4),
            Err(Error::BadStart { .. })
        ));
        assert!(osculation_refined_gf(0, 0, 4).is_err());
    }

    #[test]
    fn constant_term_is_one() {
        for (i, j) in [(0, 1), (1, 0), (2, 3), (4, 1)] {
            assert_eq!(osculating_length_gf(i, j, 4).unwrap().coeff(0), &rat(1));
        }
    }

    #[test]
    fn quotient_matches_t_form() {
        assert_eq!(
            osculating_11_quotient(15).unwrap(),
            osculating_length_gf(1, 1, 15).unwrap()
        );
    }

    #[test]
    fn vicious_one_one() {
        assert_eq!(
            vicious_length_gf(1, 1, 4),
            int_series(&[1, 4, 20, 112, 672])
        );
        assert!(vicious_length_gf(0, 3, 6).is_zero());
    }

    #[test]
    fn refined_at_u_one_is_unrefined() {
        let r = osculation_refined_gf(2, 1, 8).unwrap();
        assert_eq!(r.eval_u(&rat(1)), osculating_length_gf(2, 1, 8).unwrap());
    }
}
