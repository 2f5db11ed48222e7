//! Fixed-endpoint counts of vicious stars as binomial determinants, and the
//! complete generating functions assembled from them.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{rat, Laurent, LaurentPoly2, Rational, TruncSeries};

/// `C(n, m)`, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::from(1);
    for k in 0..m {
        acc = acc * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    acc
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Number of vicious `(i,j)`-stars of length `n` whose walkers end at
/// ordinates `-n+2r`, `-n+2r+2k`, `-n+2r+2k+2l`.
///
/// Entry `(a, b)` of the determinant is `C(n, r + e_b - s_a)` with start
/// offsets `s = (0, i, i+j)` and end offsets `e = (0, k, k+l)`.
pub fn gv_determinant(i: u32, j: u32, k: u32, l: u32, r: u32, n: u32) -> BigInt {
    let starts = [0, i64::from(i), i64::from(i) + i64::from(j)];
    let ends = [0, i64::from(k), i64::from(k) + i64::from(l)];
    let n = i64::from(n);
    let r = i64::from(r);
    let m: [[BigInt; 3]; 3] =
        std::array::from_fn(|a| std::array::from_fn(|b| binomial(n, r + ends[b] - starts[a])));
    det3(&m)
}

/// Complete generating function of vicious `(i,j)`-stars,
/// `sum_{n,k,l} sum_r v^{(k,l)}_{i,j}(r,n) x^k y^l t^n`, through `t^order`.
///
/// Identically zero when `i` or `j` is zero (two equal rows).
pub fn vicious_complete_gf(i: u32, j: u32, order: usize) -> TruncSeries<LaurentPoly2> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order as u32 {
        let mut poly = LaurentPoly2::new();
        if i > 0 && j > 0 {
            for k in 1..=i + n {
                for l in 1..=j + n {
                    let total: BigInt = (0..=n).map(|r| gv_determinant(i, j, k, l, r, n)).sum();
                    if !total.is_zero() {
                        poly.add_term([k as i32, l as i32], Rational::from_integer(total));
                    }
                }
            }
        }
        coeffs.push(poly);
    }
    TruncSeries::from_coeffs(coeffs)
}

/// Right-hand side of
/// `(1+t) O_{i,j} = x^i y^j + t (x+y+xy)/(xy) (V_{i,j} + V_{i+1,j} + V_{i,j+1})`
/// for any vicious series source.
pub fn osculating_from_vicious(
    i: u32,
    j: u32,
    v: [&TruncSeries<LaurentPoly2>; 3],
) -> TruncSeries<LaurentPoly2> {
    let order = v.iter().map(|s| s.order()).min().unwrap_or(0);
    let sum = &(v[0] + v[1]) + v[2];
    let prefactor = Laurent::from_terms([([0, -1], rat(1)), ([-1, 0], rat(1)), ([0, 0], rat(1))]);
    let tail = sum.mul_coeff(&prefactor).shift(1);
    let start = TruncSeries::constant(Laurent::monomial([i as i32, j as i32], rat(1)), order);
    &start + &tail
}

/// Complete generating function of osculating `(i,j)`-stars from the
/// vicious determinants. Every `x`, `y` exponent must come out nonnegative.
pub fn osculating_complete_gf(i: u32, j: u32, order: usize) -> Result<TruncSeries<LaurentPoly2>> {
    crate::error::reject_zero_zero(i, j)?;
    let v = [
        vicious_complete_gf(i, j, order),
        vicious_complete_gf(i + 1, j, order),
        vicious_complete_gf(i, j + 1, order),
    ];
    let rhs = osculating_from_vicious(i, j, [&v[0], &v[1], &v[2]]);
    let one_plus_t = TruncSeries::from_terms([(0, rat(1)), (1, rat(1))], order);
    let out = rhs.mul_rational(&one_plus_t.invert()?);
    for (power, c) in out.coeffs().iter().enumerate() {
        if let Some((&[x, y], _)) = c.iter().find(|(e, _)| e[0] < 0 || e[1] < 0) {
            return Err(Error::NegativeExponentSurvived {
                power,
                x_exp: x,
                y_exp: y,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::xy_pow;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(40, 20), BigInt::from(137_846_528_820u64));
    }

    #[test]
    fn empty_configuration_is_identity() {
        assert_eq!(gv_determinant(2, 3, 2, 3, 0, 0), BigInt::from(1));
        assert_eq!(gv_determinant(2, 3, 1, 3, 0, 0), BigInt::zero());
    }

    #[test]
    fn baxter_from_watermelons() {
        let b = [1, 2, 6, 22, 92, 422];
        for (n, &bn) in b.iter().enumerate() {
            let s: BigInt = (0..=n as u32)
                .map(|r| gv_determinant(1, 1, 1, 1, r, n as u32))
                .sum();
            assert_eq!(s, BigInt::from(bn), "n = {n}");
        }
    }

    #[test]
    fn vicious_complete_basics() {
        let v = vicious_complete_gf(1, 1, 4);
        assert_eq!(v.coeff(0), &xy_pow(1, 1));
        assert_eq!(
            v.eval_xy_one(),
            crate::closed_forms::vicious_length_gf(1, 1, 4)
        );
        // A multiple of xy.
        assert!(v
            .coeffs()
            .iter()
            .all(|c| c.iter().all(|(e, _)| e[0] >= 1 && e[1] >= 1)));
        assert!(vicious_complete_gf(0, 2, 3).is_zero());
    }

    #[test]
    fn osculating_complete_matches_length() {
        let o = osculating_complete_gf(1, 1, 6).unwrap();
        assert_eq!(o.coeff(0), &xy_pow(1, 1));
        assert_eq!(
            o.eval_xy_one(),
            crate::closed_forms::osculating_length_gf(1, 1, 6).unwrap()
        );
    }
}
