//! Polynomials in the osculation weight `u`.

use std::fmt;

use super::laurent::ring_ops;
use super::ring::{Multi, Rational, Ring};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in `u` with rational coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `u` itself.
    pub fn u() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * u^deg`.
    pub fn monomial(deg: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, u: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }
}

impl Ring for UPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn add_assign_ref(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }
    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }
    fn from_rational(c: Rational) -> Self {
        Self::constant(c)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
    fn terms(&self) -> Vec<(Multi, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Ring::is_zero(*c))
            .map(|(d, c)| {
                (
                    Multi {
                        u: Some(d as u32),
                        ..Multi::default()
                    },
                    c.clone(),
                )
            })
            .collect()
    }
}

ring_ops!([] UPoly);

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Ring::is_zero(*c))
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}*u"),
                _ => format!("{c}*u^{d}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ring::rat;

    fn up(cs: &[i64]) -> UPoly {
        UPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(up(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(up(&[0, 0]).is_zero());
    }

    #[test]
    fn product_and_eval() {
        // (1 - u)(1 + u) = 1 - u^2
        let p = &up(&[1, -1]) * &up(&[1, 1]);
        assert_eq!(p, up(&[1, 0, -1]));
        assert_eq!(p.eval(&rat(3)), rat(-8));
    }

    #[test]
    fn units_are_nonzero_constants() {
        assert_eq!(
            up(&[4]).unit_inverse(),
            Some(UPoly::constant(crate::series::ratio(1, 4)))
        );
        assert!(up(&[1, 1]).unit_inverse().is_none());
        assert!(UPoly::zero().unit_inverse().is_none());
    }
}
