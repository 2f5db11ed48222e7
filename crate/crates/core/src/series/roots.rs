//! Power-series roots of the algebraic equations behind the kernels.

use super::laurent::{poly1, LaurentPoly1};
use super::ring::{rat, Rational};
use super::trunc::TruncSeries;
use super::SeriesError;

/// The series `T` with `T = 2t(1+T)^2`, by fixed-point iteration.
///
/// Each pass fixes one more coefficient because the right-hand side carries
/// a factor `t`.
pub fn solve_t(order: usize) -> TruncSeries<Rational> {
    let two_t = TruncSeries::monomial(rat(2), 1, order);
    let one = TruncSeries::one(order);
    let mut t_series = TruncSeries::zero(order);
    for _ in 0..order {
        let one_plus = &one + &t_series;
        t_series = &two_t * &(&one_plus * &one_plus);
    }
    t_series
}

/// The series `X = t(1+X)^2`, the root of the two-walker kernel
/// `1 - t(1+x)(1+1/x)` (Catalan numbers shifted by one).
pub fn solve_x(order: usize) -> TruncSeries<Rational> {
    let t = TruncSeries::t(order);
    let one = TruncSeries::one(order);
    let mut x = TruncSeries::zero(order);
    for _ in 0..order {
        let one_plus = &one + &x;
        x = &t * &(&one_plus * &one_plus);
    }
    x
}

/// Per-coefficient exponent bound used for `Y0`: the `t^n` coefficient must
/// live in `[-(n+2), n+2]`, and never beyond `window`.
pub fn y0_window(power: usize, window: i32) -> i32 {
    (power as i32 + 2).min(window)
}

/// The power-series root `Y0(x)` of `K(x, y) = xy - t(1+x)(1+y)(x+y)`.
///
/// Iterates `Y <- t(1 + 1/x)(1 + Y)(x + Y)`, which is `K(x, Y) = 0` divided
/// by `x`. `window` bounds the `x`-exponents stored at every order and must
/// be at least `order`; a term outside the bound is an error.
pub fn solve_y0(order: usize, window: i32) -> Result<TruncSeries<LaurentPoly1>, SeriesError> {
    let prefactor: TruncSeries<LaurentPoly1> =
        TruncSeries::monomial(poly1(&[(0, 1), (-1, 1)]), 1, order);
    let one = TruncSeries::<LaurentPoly1>::one(order);
    let x = TruncSeries::constant(poly1(&[(1, 1)]), order);
    let mut y = TruncSeries::<LaurentPoly1>::zero(order);
    for _ in 0..order {
        y = &prefactor * &(&(&one + &y) * &(&x + &y));
    }
    for (n, c) in y.coeffs().iter().enumerate() {
        let bound = y0_window(n, window);
        if let Some((lo, hi)) = c.support_bounds() {
            let bad = if lo < -bound { lo } else { hi };
            if lo < -bound || hi > bound {
                return Err(SeriesError::WindowExceeded {
                    power: n,
                    exponent: bad,
                    bound,
                });
            }
        }
    }
    Ok(y)
}
