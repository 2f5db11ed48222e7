//! The orbit of `(x, Y0)` under the two involutions fixing the kernel, built
//! symbolically on monomials `x^a Y0^b` and evaluated as series on demand.

use std::fmt;

use serde::Serialize;

use crate::series::{rat, solve_y0, substitute, LaurentPoly1, Rational, SeriesError, TruncSeries};

/// The monomial `x^x * Y0^y0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial {
    pub x: i32,
    pub y0: i32,
}

impl std::ops::Mul for Monomial {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y0 + o.y0)
    }
}

impl std::ops::Div for Monomial {
    type Output = Self;

    fn div(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y0 - o.y0)
    }
}

impl Monomial {
    pub const X: Monomial = Monomial { x: 1, y0: 0 };
    pub const Y0: Monomial = Monomial { x: 0, y0: 1 };

    pub const fn new(x: i32, y0: i32) -> Self {
        Self { x, y0 }
    }

    pub fn pow(self, k: i32) -> Self {
        Self::new(self.x * k, self.y0 * k)
    }

    /// A power series in `t` (no negative power of `Y0`).
    pub fn is_series(self) -> bool {
        self.y0 >= 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, e: i32| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        let s = [part("x", self.x), part("Y0", self.y0)]
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect::<Vec<_>>()
            .join(" ");
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{s}")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPair {
    pub x: Monomial,
    pub y: Monomial,
    /// Both coordinates are power series, so the pair may be substituted
    /// into the main equation.
    pub framed: bool,
}

impl OrbitPair {
    pub fn new(x: Monomial, y: Monomial) -> Self {
        Self {
            x,
            y,
            framed: x.is_series() && y.is_series(),
        }
    }
}

impl fmt::Display for OrbitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(X, Y) -> (Y/X, Y)`, the other root in the first variable.
pub fn phi(p: OrbitPair) -> OrbitPair {
    OrbitPair::new(p.y / p.x, p.y)
}

/// `(X, Y) -> (X, X/Y)`, the other root in the second variable.
pub fn psi(p: OrbitPair) -> OrbitPair {
    OrbitPair::new(p.x, p.x / p.y)
}

/// Applies `phi`, `psi`, `phi`, ... to `(x, Y0)` until the start recurs.
pub fn orbit() -> Vec<OrbitPair> {
    let start = OrbitPair::new(Monomial::X, Monomial::Y0);
    let mut out = vec![start];
    let mut cur = start;
    for step in 0.. {
        cur = if step % 2 == 0 { phi(cur) } else { psi(cur) };
        if cur == start || step > 64 {
            break;
        }
        out.push(cur);
    }
    out
}

/// The six pairs in the order the construction visits them.
pub fn expected_orbit() -> [OrbitPair; 6] {
    let m = Monomial::new;
    [
        OrbitPair::new(m(1, 0), m(0, 1)),
        OrbitPair::new(m(-1, 1), m(0, 1)),
        OrbitPair::new(m(-1, 1), m(-1, 0)),
        OrbitPair::new(m(0, -1), m(-1, 0)),
        OrbitPair::new(m(0, -1), m(1, -1)),
        OrbitPair::new(m(1, 0), m(1, -1)),
    ]
}

/// Evaluates monomials in `x` and `Y0` as series with Laurent coefficients,
/// caching the powers of `Y0`.
pub struct Evaluator {
    order: usize,
    powers: Vec<TruncSeries<LaurentPoly1>>,
}

impl Evaluator {
    pub fn new(order: usize) -> Result<Self, SeriesError> {
        let y0 = solve_y0(order, order as i32 + 2)?;
        Ok(Self {
            order,
            powers: vec![TruncSeries::one(order), y0],
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn y0(&self) -> &TruncSeries<LaurentPoly1> {
        &self.powers[1]
    }

    fn y0_power(&mut self, k: usize) -> &TruncSeries<LaurentPoly1> {
        while self.powers.len() <= k {
            let next = &self.powers[self.powers.len() - 1] * &self.powers[1];
            self.powers.push(next);
        }
        &self.powers[k]
    }

    /// `x^a Y0^b` for `b >= 0`.
    pub fn monomial(&mut self, m: Monomial) -> TruncSeries<LaurentPoly1> {
        assert!(m.is_series(), "{m} is not a power series in t");
        self.y0_power(m.y0 as usize).shift_exponent(m.x)
    }

    /// `c * x^a Y0^b` summed over `terms`, with rational series coefficients.
    pub fn combination(
        &mut self,
        terms: &[(TruncSeries<Rational>, Monomial)],
    ) -> TruncSeries<LaurentPoly1> {
        let mut acc = TruncSeries::zero(self.order);
        for (c, m) in terms {
            acc = &acc + &self.monomial(*m).mul_rational(c);
        }
        acc
    }

    /// `f(m)` for a series `f` polynomial in its variable.
    pub fn apply(
        &mut self,
        f: &TruncSeries<LaurentPoly1>,
        m: Monomial,
    ) -> Result<TruncSeries<LaurentPoly1>, SeriesError> {
        if m.y0 == 0 {
            Ok(f.power_map(m.x))
        } else {
            let inner = self.monomial(m);
            substitute(f, &inner)
        }
    }

    /// `K(X, Y)` for a pair, multiplied by the least power of `Y0` that
    /// makes every term a power series. Returns the multiplier exponent
    /// and the (cleared) value.
    pub fn kernel_cleared(&mut self, p: OrbitPair) -> (i32, TruncSeries<LaurentPoly1>) {
        // XY - t(X + Y + X^2 + 2XY + Y^2 + X^2Y + XY^2)
        let (x, y) = (p.x, p.y);
        let words: [(i64, i64, Monomial); 8] = [
            (1, 0, x * y),
            (0, -1, x),
            (0, -1, y),
            (0, -1, x.pow(2)),
            (0, -2, x * y),
            (0, -1, y.pow(2)),
            (0, -1, x.pow(2) * y),
            (0, -1, x * y.pow(2)),
        ];
        let lowest = words.iter().map(|w| w.2.y0).min().unwrap_or(0).min(0);
        let lift = Monomial::new(0, -lowest);
        let order = self.order;
        let terms: Vec<(TruncSeries<Rational>, Monomial)> = words
            .iter()
            .map(|&(c0, c1, m)| {
                (
                    TruncSeries::from_terms([(0, rat(c0)), (1, rat(c1))], order),
                    m * lift,
                )
            })
            .collect();
        (-lowest, self.combination(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_has_six_pairs() {
        let o = orbit();
        assert_eq!(o.len(), 6);
        assert_eq!(o, expected_orbit());
        let framed: Vec<bool> = o.iter().map(|p| p.framed).collect();
        assert_eq!(framed, [true, true, true, false, false, false]);
    }

    #[test]
    fn involutions() {
        for p in orbit() {
            assert_eq!(phi(phi(p)), p);
            assert_eq!(psi(psi(p)), p);
        }
    }

    #[test]
    fn display() {
        assert_eq!(expected_orbit()[1].to_string(), "(x^-1 Y0, Y0)");
        assert_eq!(expected_orbit()[4].to_string(), "(Y0^-1, x Y0^-1)");
    }

    #[test]
    fn every_pair_cancels_the_kernel() {
        let mut ev = Evaluator::new(8).unwrap();
        for p in orbit() {
            let (_, k) = ev.kernel_cleared(p);
            assert!(k.is_zero(), "{p}");
        }
    }
}
