//! The coefficient-ring abstraction shared by every series type.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Position of a single term inside a (possibly nested) coefficient.
///
/// Each field is present only when the coefficient ring carries that
/// variable: `x` and `y` are the catalytic Laurent variables, `u` marks
/// osculations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multi {
    pub x: Option<i32>,
    pub y: Option<i32>,
    pub u: Option<u32>,
}

impl Multi {
    /// Exponents in `(x, y, u)` order, skipping absent variables.
    pub fn exponents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(3);
        if let Some(e) = self.x {
            out.push(i64::from(e));
        }
        if let Some(e) = self.y {
            out.push(i64::from(e));
        }
        if let Some(e) = self.u {
            out.push(i64::from(e));
        }
        out
    }

    fn merge(self, inner: Multi) -> Multi {
        Multi {
            x: self.x.or(inner.x),
            y: self.y.or(inner.y),
            u: self.u.or(inner.u),
        }
    }
}

/// A commutative ring with rational scalars, as used for series coefficients.
///
/// The by-reference methods keep generic code free of operator-trait bounds;
/// the concrete types additionally implement `std::ops`.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Nonzero terms with their positions, in a deterministic order.
    fn terms(&self) -> Vec<(Multi, Rational)>;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn terms(&self) -> Vec<(Multi, Rational)> {
        if Zero::is_zero(self) {
            Vec::new()
        } else {
            vec![(Multi::default(), self.clone())]
        }
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Exponent of a monomial in one or two Laurent variables.
pub trait Exponent: Copy + Ord + fmt::Debug + Send + Sync + 'static {
    fn origin() -> Self;
    fn combine(self, other: Self) -> Self;
    fn negate(self) -> Self;
    fn multi(self) -> Multi;
}

impl Exponent for i32 {
    fn origin() -> Self {
        0
    }
    fn combine(self, other: Self) -> Self {
        self + other
    }
    fn negate(self) -> Self {
        -self
    }
    fn multi(self) -> Multi {
        Multi {
            x: Some(self),
            ..Multi::default()
        }
    }
}

impl Exponent for [i32; 2] {
    fn origin() -> Self {
        [0, 0]
    }
    fn combine(self, other: Self) -> Self {
        [self[0] + other[0], self[1] + other[1]]
    }
    fn negate(self) -> Self {
        [-self[0], -self[1]]
    }
    fn multi(self) -> Multi {
        Multi {
            x: Some(self[0]),
            y: Some(self[1]),
            u: None,
        }
    }
}

pub(crate) fn merge_multi(outer: Multi, inner: Multi) -> Multi {
    outer.merge(inner)
}

/// Decimal rendering used by every text and JSON surface.
pub fn rational_parts(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
