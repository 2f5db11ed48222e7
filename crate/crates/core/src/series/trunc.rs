//! Power series in `t` truncated after a fixed order.
//!
//! A series of order `N` carries the coefficients of `t^0 ..= t^N`. Binary
//! operations truncate to the smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{Laurent, LaurentPoly1};
use super::ring::{rat, Exponent, Multi, Rational, Ring};
use super::upoly::UPoly;
use super::SeriesError;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^power`; vanishes if `power > order`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// Builds a series from coefficients of `t^0, t^1, ...`; the order is
    /// `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least t^0");
        Self { coeffs }
    }

    /// Like [`from_coeffs`](Self::from_coeffs) but pads with zeros or
    /// truncates to `order`.
    pub fn from_coeffs_with_order(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    /// Builds a polynomial in `t` from `(power, coeff)` pairs, truncated at `order`.
    pub fn from_terms<I: IntoIterator<Item = (usize, C)>>(terms: I, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (p, c) in terms {
            if p <= order {
                s.coeffs[p].add_assign_ref(&c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Smallest `n` with a nonzero `t^n` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients above `order`. Raising the order is refused
    /// silently: the result keeps its current order in that case.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn map<D: Ring>(&self, f: impl FnMut(&C) -> D) -> TruncSeries<D> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    /// Multiplies by a rational series, coefficient ring embedded.
    pub fn mul_rational(&self, r: &TruncSeries<Rational>) -> Self {
        let order = self.order().min(r.order());
        let mut out = vec![C::zero(); order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in r.coeffs.iter().enumerate().take(order + 1 - a) {
                if Ring::is_zero(cb) {
                    continue;
                }
                out[a + b].add_assign_ref(&ca.scale(cb));
            }
        }
        Self { coeffs: out }
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k > order {
                break;
            }
            out[n + k] = c.clone();
        }
        Self { coeffs: out }
    }

    /// Exact division by `t^k`; the result has order `N - k`.
    pub fn divide_by_t_power(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::OrderTooSmall {
                needed: k,
                order: self.order(),
            });
        }
        if let Some(p) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroLowOrderTerm { power: p });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse, requiring a unit constant term.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                acc.add_assign_ref(&a.mul_ref(&out[n - k]));
            }
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Self { coeffs: out })
    }

    /// `self / other` via [`invert`](Self::invert).
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Termwise derivative in `t`; the order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&rat(n as i64)))
                .collect(),
        }
    }

    /// Square root with constant term one, by Newton iteration
    /// `y <- (y + s/y) / 2` starting from `y = 1`; each step doubles the
    /// number of correct coefficients.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let order = self.order();
        let half = super::ring::ratio(1, 2);
        let mut y = Self::one(0);
        let mut prec = 0usize;
        while prec < order {
            prec = (2 * prec + 1).min(order);
            let y_ext = Self::from_coeffs_with_order(y.coeffs, prec);
            let s = self.truncate(prec);
            let q = &s * &y_ext.invert()?;
            y = (&y_ext + &q).scale(&half);
        }
        Ok(Self::from_coeffs_with_order(y.coeffs, order))
    }

    /// First nonzero coefficient term, as `(t power, position, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, Multi, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find_map(|(n, c)| c.terms().into_iter().next().map(|(m, r)| (n, m, r)))
    }
}

impl<E: Exponent, C: Ring> TruncSeries<Laurent<E, C>> {
    /// Multiplies every coefficient by the monomial `var^exp`.
    pub fn shift_exponent(&self, exp: E) -> Self {
        self.map(|c| c.shift(exp))
    }
}

impl<C: Ring> TruncSeries<Laurent<i32, C>> {
    /// Strictly positive powers of the Laurent variable.
    pub fn positive_part(&self) -> Self {
        self.map(|c| c.positive_part())
    }

    /// Strictly negative powers of the Laurent variable.
    pub fn negative_part(&self) -> Self {
        self.map(|c| c.negative_part())
    }

    /// Exponent-zero terms.
    pub fn constant_part(&self) -> Self {
        self.map(|c| c.constant_part())
    }

    /// Substitutes `x -> x^k`.
    pub fn power_map(&self, k: i32) -> Self {
        self.map(|c| c.power_map(k))
    }

    pub fn eval_at_one(&self) -> TruncSeries<C> {
        self.map(|c| c.eval_at_one())
    }

    pub fn embed_x(&self) -> TruncSeries<Laurent<[i32; 2], C>> {
        self.map(|c| c.embed_x())
    }

    pub fn embed_y(&self) -> TruncSeries<Laurent<[i32; 2], C>> {
        self.map(|c| c.embed_y())
    }
}

impl<C: Ring> TruncSeries<Laurent<[i32; 2], C>> {
    /// Coefficient of `y^l` in every `t`-coefficient.
    pub fn y_slice(&self, l: i32) -> TruncSeries<Laurent<i32, C>> {
        self.map(|c| c.y_slice(l))
    }

    /// Coefficient of `x^k` in every `t`-coefficient, as a series in `y`.
    pub fn x_slice(&self, k: i32) -> TruncSeries<Laurent<i32, C>> {
        self.map(|c| c.x_slice(k))
    }

    /// Coefficient of `x^k y^l`.
    pub fn xy_coeff(&self, k: i32, l: i32) -> TruncSeries<C> {
        self.map(|c| c.coeff([k, l]))
    }

    pub fn eval_xy_one(&self) -> TruncSeries<C> {
        self.map(|c| c.eval_xy_one())
    }
}

impl<E: Exponent> TruncSeries<Laurent<E, Rational>> {
    pub fn lift<D: Ring>(&self) -> TruncSeries<Laurent<E, D>> {
        self.map(|c| c.lift())
    }
}

impl<E: Exponent> TruncSeries<Laurent<E, UPoly>> {
    pub fn eval_u(&self, u: &Rational) -> TruncSeries<Laurent<E, Rational>> {
        self.map(|c| c.eval_u(u))
    }
}

impl TruncSeries<UPoly> {
    pub fn eval_u(&self, u: &Rational) -> TruncSeries<Rational> {
        self.map(|c| c.eval(u))
    }
}

impl TruncSeries<Rational> {
    /// Lifts rational coefficients into another ring.
    pub fn lift<D: Ring>(&self) -> TruncSeries<D> {
        self.map(|c| D::from_rational(c.clone()))
    }
}

/// Replaces the variable of `outer` by the series `inner`:
/// `sum_n t^n sum_k q_{n,k} y^k  ->  sum_n t^n sum_k q_{n,k} inner^k`.
///
/// `outer` must be polynomial (nonnegative exponents) in its variable and
/// `inner` must have no `t^0` term, so that only finitely many powers
/// contribute below the truncation order.
pub fn substitute(
    outer: &TruncSeries<LaurentPoly1>,
    inner: &TruncSeries<LaurentPoly1>,
) -> Result<TruncSeries<LaurentPoly1>, SeriesError> {
    if !inner.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroValuation);
    }
    let order = outer.order().min(inner.order());
    let mut max_deg = 0i32;
    for (n, c) in outer.coeffs.iter().enumerate().take(order + 1) {
        if let Some((lo, hi)) = c.support_bounds() {
            if lo < 0 {
                return Err(SeriesError::NegativeOuterExponent {
                    power: n,
                    exponent: lo,
                });
            }
            max_deg = max_deg.max(hi);
        }
    }
    // inner^k has valuation >= k, so powers beyond the order vanish.
    let max_deg = (max_deg as usize).min(order);
    let inner = inner.truncate(order);
    let mut powers = Vec::with_capacity(max_deg + 1);
    powers.push(TruncSeries::<LaurentPoly1>::one(order));
    for k in 1..=max_deg {
        let next = &powers[k - 1] * &inner;
        powers.push(next);
    }
    let mut out = TruncSeries::<LaurentPoly1>::zero(order);
    for (n, c) in outer.coeffs.iter().enumerate().take(order + 1) {
        for (&k, q) in c.iter() {
            let k = k as usize;
            if k > max_deg {
                continue;
            }
            // t^n * q * inner^k, with inner^k already of valuation >= k.
            for (m, pc) in powers[k].coeffs.iter().enumerate() {
                if n + m > order {
                    break;
                }
                if pc.is_zero() {
                    continue;
                }
                out.coeffs[n + m].add_assign_ref(&pc.scale(q));
            }
        }
    }
    Ok(out)
}

impl<C: Ring> Ring for TruncSeries<C> {
    fn zero() -> Self {
        Self::zero(0)
    }
    fn one() -> Self {
        Self::one(0)
    }
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: self.coeffs[..=order]
                .iter()
                .zip(&other.coeffs[..=order])
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: self.coeffs[..=order]
                .iter()
                .zip(&other.coeffs[..=order])
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![C::zero(); order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                if cb.is_zero() {
                    continue;
                }
                out[a + b].add_assign_ref(&ca.mul_ref(cb));
            }
        }
        Self { coeffs: out }
    }
    fn neg_ref(&self) -> Self {
        self.map(|c| c.neg_ref())
    }
    fn scale(&self, c: &Rational) -> Self {
        TruncSeries::scale(self, c)
    }
    fn from_rational(c: Rational) -> Self {
        Self::constant(C::from_rational(c), 0)
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn terms(&self) -> Vec<(Multi, Rational)> {
        self.coeffs.iter().flat_map(|c| c.terms()).collect()
    }
}

impl<C: Ring> Add<&TruncSeries<C>> for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self.add_ref(rhs)
    }
}
impl<C: Ring> Sub<&TruncSeries<C>> for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self.sub_ref(rhs)
    }
}
impl<C: Ring> Mul<&TruncSeries<C>> for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        self.mul_ref(rhs)
    }
}
impl<C: Ring> Add for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
        self.add_ref(&rhs)
    }
}
impl<C: Ring> Sub for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
        self.sub_ref(&rhs)
    }
}
impl<C: Ring> Mul for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
        self.mul_ref(&rhs)
    }
}
impl<C: Ring> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        self.neg_ref()
    }
}
impl<C: Ring> Neg for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        self.neg_ref()
    }
}

/// Rational series from integer coefficients.
pub fn int_series(coeffs: &[i64]) -> TruncSeries<Rational> {
    TruncSeries::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
}

/// Rational polynomial in `t` from integer coefficients, at the given order.
pub fn int_poly(coeffs: &[i64], order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_terms(coeffs.iter().enumerate().map(|(n, &c)| (n, rat(c))), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::laurent::{poly1, x_pow};
    use crate::series::ratio;

    #[test]
    fn difference_of_squares() {
        let a = int_poly(&[1, 1], 2);
        let b = int_poly(&[1, -1], 2);
        assert_eq!(&a * &b, int_series(&[1, 0, -1]));
    }

    #[test]
    fn additive_identity() {
        let s = int_series(&[3, -1, 4, 1]);
        assert_eq!(&TruncSeries::zero(3) + &s, s);
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = int_series(&[1, 1, 1, 1, 1]);
        let b = int_series(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn geometric_inverses() {
        assert_eq!(
            int_poly(&[1, -1], 3).invert().unwrap(),
            int_series(&[1, 1, 1, 1])
        );
        assert_eq!(
            int_poly(&[1, 1], 3).invert().unwrap(),
            int_series(&[1, -1, 1, -1])
        );
    }

    #[test]
    fn inverse_of_two_plus_t_series() {
        // 2 + T with T = 2t + 8t^2. Long division by hand:
        // b0 = 1/2, b1 = -(2 b0)/2 = -1/2, b2 = -(2 b1 + 8 b0)/2 = -3/2.
        let s = int_series(&[2, 2, 8]);
        let inv = s.invert().unwrap();
        assert_eq!(
            inv,
            TruncSeries::from_coeffs(vec![ratio(1, 2), ratio(-1, 2), ratio(-3, 2)])
        );
        assert_eq!(&inv * &s, int_series(&[1, 0, 0]));
    }

    #[test]
    fn non_invertible_constant_term() {
        assert_eq!(
            int_poly(&[0, 1], 3).invert(),
            Err(SeriesError::NonInvertibleConstantTerm)
        );
        let s: TruncSeries<LaurentPoly1> = TruncSeries::constant(poly1(&[(0, 1), (1, 1)]), 2);
        assert!(s.invert().is_err());
        let unit: TruncSeries<LaurentPoly1> = TruncSeries::constant(x_pow(2), 2);
        assert_eq!(unit.invert().unwrap().coeff(0), &x_pow(-2));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            int_series(&[1, 0, 0]).sqrt().unwrap(),
            int_series(&[1, 0, 0])
        );
        assert_eq!(
            int_series(&[1, 2, 1, 0, 0]).sqrt().unwrap(),
            int_series(&[1, 1, 0, 0, 0])
        );
        assert_eq!(
            int_poly(&[1, -8], 4).sqrt().unwrap(),
            int_series(&[1, -4, -8, -32, -160])
        );
        assert_eq!(
            int_series(&[2, 1]).sqrt(),
            Err(SeriesError::BadConstantTerm)
        );
    }

    #[test]
    fn divide_by_t_power_examples() {
        assert_eq!(
            int_series(&[0, 0, 1]).divide_by_t_power(2).unwrap(),
            int_series(&[1])
        );
        assert_eq!(
            int_series(&[0, 0, 8, 72]).divide_by_t_power(2).unwrap(),
            int_series(&[8, 72])
        );
        assert_eq!(
            int_series(&[0, 1, 8]).divide_by_t_power(2),
            Err(SeriesError::NonzeroLowOrderTerm { power: 1 })
        );
    }

    #[test]
    fn positive_and_negative_parts() {
        let f: TruncSeries<LaurentPoly1> = TruncSeries::from_coeffs(vec![
            poly1(&[(1, 1), (0, 1), (-1, 1)]),
            poly1(&[(2, 1), (-3, 1)]),
        ]);
        let pos = f.positive_part();
        assert_eq!(pos.coeff(0), &poly1(&[(1, 1)]));
        let neg = f.negative_part();
        assert_eq!(neg.coeff(1), &poly1(&[(-3, 1)]));
        assert!(neg.coeff(0) == &poly1(&[(-1, 1)]));
    }

    #[test]
    fn substitute_constant_and_square() {
        let order = 4;
        let inner: TruncSeries<LaurentPoly1> = TruncSeries::from_terms(
            [(1, poly1(&[(0, 1), (1, 1)])), (2, poly1(&[(2, 3)]))],
            order,
        );
        let c: TruncSeries<LaurentPoly1> = TruncSeries::constant(poly1(&[(0, 5)]), order);
        assert_eq!(substitute(&c, &inner).unwrap(), c);
        let y2: TruncSeries<LaurentPoly1> = TruncSeries::constant(x_pow(2), order);
        assert_eq!(substitute(&y2, &inner).unwrap(), &inner * &inner);
        let bad: TruncSeries<LaurentPoly1> = TruncSeries::one(order);
        assert_eq!(substitute(&y2, &bad), Err(SeriesError::NonzeroValuation));
    }

    #[test]
    fn derivative_lowers_order() {
        let s = int_series(&[5, 1, 3, 2]);
        assert_eq!(s.derivative(), int_series(&[1, 6, 6]));
    }
}
