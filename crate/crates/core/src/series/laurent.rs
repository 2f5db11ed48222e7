//! Finite Laurent polynomials in one or two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{fmt_rational, is_negative, merge_multi, Exponent, Multi, Rational, Ring};
use super::upoly::UPoly;

/// Laurent polynomial with exponents of type `E` and coefficients in `C`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent, C: Ring> {
    terms: BTreeMap<E, C>,
}

/// Laurent polynomial in `x` with rational coefficients.
pub type LaurentPoly1 = Laurent<i32, Rational>;
/// Laurent polynomial in `x, y` with rational coefficients.
pub type LaurentPoly2 = Laurent<[i32; 2], Rational>;
/// Laurent polynomial in `x` with coefficients polynomial in `u`.
pub type LaurentPoly1U = Laurent<i32, UPoly>;
/// Laurent polynomial in `x, y` with coefficients polynomial in `u`.
pub type LaurentPoly2U = Laurent<[i32; 2], UPoly>;

impl<E: Exponent, C: Ring> Laurent<E, C> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: E, coeff: C) -> Self {
        let mut out = Self::new();
        out.add_term(exp, coeff);
        out
    }

    pub fn constant(coeff: C) -> Self {
        Self::monomial(E::origin(), coeff)
    }

    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Adds `coeff * var^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: E, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                c.add_assign_ref(&coeff);
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn coeff(&self, exp: E) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by the monomial `var^exp`.
    pub fn shift(&self, exp: E) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.combine(exp), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&E) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Rewrites every exponent, summing terms that collide.
    pub fn map_exponents<F: Exponent>(&self, mut f: impl FnMut(E) -> F) -> Laurent<F, C> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> Laurent<E, D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Sum of all coefficients, i.e. evaluation at 1 in every Laurent variable.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc.add_assign_ref(c);
        }
        acc
    }

    pub fn min_exponent(&self) -> Option<E> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<E> {
        self.terms.keys().next_back().copied()
    }
}

impl<C: Ring> Laurent<i32, C> {
    /// Inclusive bounds of the support, `None` for the zero polynomial.
    pub fn support_bounds(&self) -> Option<(i32, i32)> {
        Some((self.min_exponent()?, self.max_exponent()?))
    }

    /// Terms with strictly positive exponent.
    pub fn positive_part(&self) -> Self {
        self.filter(|e| *e > 0)
    }

    /// Terms with strictly negative exponent.
    pub fn negative_part(&self) -> Self {
        self.filter(|e| *e < 0)
    }

    /// The exponent-zero term as a polynomial.
    pub fn constant_part(&self) -> Self {
        self.filter(|e| *e == 0)
    }

    /// Substitutes `x -> x^k` (use `k = -1` for `x -> 1/x`).
    pub fn power_map(&self, k: i32) -> Self {
        self.map_exponents(|e| e * k)
    }

    /// Embeds as a polynomial in `x` of the two-variable ring.
    pub fn embed_x(&self) -> Laurent<[i32; 2], C> {
        self.map_exponents(|e| [e, 0])
    }

    /// Embeds as a polynomial in `y` of the two-variable ring.
    pub fn embed_y(&self) -> Laurent<[i32; 2], C> {
        self.map_exponents(|e| [0, e])
    }
}

impl<C: Ring> Laurent<[i32; 2], C> {
    /// Coefficient of `y^l`, as a polynomial in `x`.
    pub fn y_slice(&self, l: i32) -> Laurent<i32, C> {
        Laurent::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e[1] == l)
                .map(|(e, c)| (e[0], c.clone())),
        )
    }

    /// Coefficient of `x^k`, as a polynomial in `y` (returned in the
    /// one-variable ring, whose variable then plays the role of `y`).
    pub fn x_slice(&self, k: i32) -> Laurent<i32, C> {
        Laurent::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e[0] == k)
                .map(|(e, c)| (e[1], c.clone())),
        )
    }

    /// Evaluation at `x = y = 1`.
    pub fn eval_xy_one(&self) -> C {
        self.eval_at_one()
    }

    /// Evaluation at `x = 1`, leaving a polynomial in `y`.
    pub fn eval_x_one(&self) -> Laurent<i32, C> {
        self.map_exponents(|e| e[1])
    }

    /// Evaluation at `y = 1`, leaving a polynomial in `x`.
    pub fn eval_y_one(&self) -> Laurent<i32, C> {
        self.map_exponents(|e| e[0])
    }
}

impl<E: Exponent> Laurent<E, Rational> {
    /// Lifts rational coefficients into another coefficient ring.
    pub fn lift<D: Ring>(&self) -> Laurent<E, D> {
        self.map_coeffs(|c| D::from_rational(c.clone()))
    }
}

impl<E: Exponent> Laurent<E, UPoly> {
    /// Specializes the osculation weight `u` to a rational value.
    pub fn eval_u(&self, u: &Rational) -> Laurent<E, Rational> {
        self.map_coeffs(|c| c.eval(u))
    }
}

impl<E: Exponent, C: Ring> Default for Laurent<E, C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<E: Exponent, C: Ring> Ring for Laurent<E, C> {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<E, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca.mul_ref(cb);
                acc.entry(ea.combine(*eb))
                    .and_modify(|c| c.add_assign_ref(&prod))
                    .or_insert(prod);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }
    fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }
    fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }
    fn from_rational(c: Rational) -> Self {
        Self::constant(C::from_rational(c))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(e.negate(), c.unit_inverse()?))
    }
    fn terms(&self) -> Vec<(Multi, Rational)> {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            for (inner, r) in c.terms() {
                out.push((merge_multi(e.multi(), inner), r));
            }
        }
        out
    }
}

impl<E: Exponent, C: Ring> fmt::Debug for Laurent<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: Exponent, C: Ring> fmt::Display for Laurent<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if let Some(e) = m.x.filter(|e| *e != 0) {
                factors.push(if e == 1 {
                    "x".to_string()
                } else {
                    format!("x^{e}")
                });
            }
            if let Some(e) = m.y.filter(|e| *e != 0) {
                factors.push(if e == 1 {
                    "y".to_string()
                } else {
                    format!("y^{e}")
                });
            }
            if let Some(e) = m.u.filter(|e| *e != 0) {
                factors.push(if e == 1 {
                    "u".to_string()
                } else {
                    format!("u^{e}")
                });
            }
            let one = abs == Rational::one();
            match (factors.is_empty(), one) {
                (true, _) => f.write_str(&fmt_rational(&abs))?,
                (false, true) => f.write_str(&factors.join("*"))?,
                (false, false) => write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?,
            }
        }
        Ok(())
    }
}

macro_rules! ring_ops {
    ([$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                Ring::add_ref(self, rhs)
            }
        }
        impl<$($gen)*> Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                Ring::sub_ref(self, rhs)
            }
        }
        impl<$($gen)*> Mul<&$ty> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                Ring::mul_ref(self, rhs)
            }
        }
        impl<$($gen)*> Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                Ring::add_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                Ring::sub_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                Ring::mul_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Ring::neg_ref(self)
            }
        }
        impl<$($gen)*> Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Ring::neg_ref(&self)
            }
        }
    };
}
pub(crate) use ring_ops;

ring_ops!([E: Exponent, C: Ring] Laurent<E, C>);

/// `x^e` with unit coefficient.
pub fn x_pow(e: i32) -> LaurentPoly1 {
    Laurent::monomial(e, Rational::one())
}

/// `x^a y^b` with unit coefficient.
pub fn xy_pow(a: i32, b: i32) -> LaurentPoly2 {
    Laurent::monomial([a, b], Rational::one())
}

/// Builds a one-variable polynomial from `(exponent, integer coefficient)` pairs.
pub fn poly1(terms: &[(i32, i64)]) -> LaurentPoly1 {
    Laurent::from_terms(terms.iter().map(|&(e, c)| (e, super::ring::rat(c))))
}

/// Builds a two-variable polynomial from `((ex, ey), integer coefficient)` pairs.
pub fn poly2(terms: &[((i32, i32), i64)]) -> LaurentPoly2 {
    Laurent::from_terms(
        terms
            .iter()
            .map(|&((a, b), c)| ([a, b], super::ring::rat(c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ring::rat;

    #[test]
    fn square_of_x_plus_xbar() {
        let p = poly1(&[(1, 1), (-1, 1)]);
        assert_eq!(&p * &p, poly1(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn cancellation_removes_entries() {
        let p = poly1(&[(3, 2), (0, 1)]);
        let q = poly1(&[(3, -2)]);
        let sum = &p + &q;
        assert_eq!(sum.len(), 1);
        assert_eq!(sum.coeff(3), rat(0));
    }

    #[test]
    fn only_monomials_are_units() {
        let m = Laurent::monomial(-2, rat(3));
        let inv = m.unit_inverse().unwrap();
        assert_eq!(&m * &inv, LaurentPoly1::one());
        assert!(poly1(&[(0, 1), (1, 1)]).unit_inverse().is_none());
    }

    #[test]
    fn slices_of_bivariate() {
        let p = poly2(&[((1, 0), 2), ((0, 1), 3), ((2, 1), 5)]);
        assert_eq!(p.y_slice(0), poly1(&[(1, 2)]));
        assert_eq!(p.x_slice(0), poly1(&[(1, 3)]));
        assert_eq!(p.eval_xy_one(), rat(10));
    }

    #[test]
    fn display_is_readable() {
        let p = poly2(&[((1, 0), 1), ((0, 0), -2), ((0, -1), 1)]);
        assert_eq!(p.to_string(), "y^-1 - 2 + x");
    }
}
