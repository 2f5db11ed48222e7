//! The kernel `K(x,y) = xy - t(1+x)(1+y)(x+y)` of the three-walker
//! functional equation, its orbit, and coefficientwise checks of every
//! equation derived from it against enumerated series.

mod checks;
mod orbit;

pub use checks::{
    check_boundary, check_framed_system, check_main_equation, check_orbit, check_prop2_derivation,
    check_quasivicious, check_refined_equation, main_equation_residual, reconstruct_boundary,
    CheckOrders,
};
pub use orbit::{expected_orbit, orbit, phi, psi, Evaluator, Monomial, OrbitPair};

use crate::enumerator::{enumerate_dp, Mode, WalkerSystem};
use crate::series::{Laurent, Ring, TruncSeries};

/// `(1+t)(1+y)(x+y)` expanded: `x + y + x^2 + 2xy + y^2 + x^2 y + x y^2`.
fn kernel_tail<C: Ring>() -> Laurent<[i32; 2], C> {
    let one = C::one();
    let two = one.add_ref(&one);
    Laurent::from_terms([
        ([1, 0], one.clone()),
        ([0, 1], one.clone()),
        ([2, 0], one.clone()),
        ([1, 1], two),
        ([0, 2], one.clone()),
        ([2, 1], one.clone()),
        ([1, 2], one),
    ])
}

/// The kernel, with coefficients truncated at `t^order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub order: usize,
}

impl Kernel {
    pub fn new(order: usize) -> Self {
        Self { order }
    }

    /// `K(x, y)` as a series with bivariate Laurent coefficients.
    pub fn bivariate<C: Ring>(&self) -> TruncSeries<Laurent<[i32; 2], C>> {
        TruncSeries::from_terms(
            [
                (0, Laurent::monomial([1, 1], C::one())),
                (1, kernel_tail::<C>().neg_ref()),
            ],
            self.order,
        )
    }

    /// `K(X, Y)` for two series in one variable.
    pub fn at<C: Ring>(
        &self,
        x: &TruncSeries<Laurent<i32, C>>,
        y: &TruncSeries<Laurent<i32, C>>,
    ) -> TruncSeries<Laurent<i32, C>> {
        let one = TruncSeries::<Laurent<i32, C>>::one(self.order);
        let t = TruncSeries::<Laurent<i32, C>>::t(self.order);
        let prod = &(&(&one + x) * &(&one + y)) * &(x + y);
        &(x * y) - &(&t * &prod)
    }

    /// Solves `K(x,y) F = R` for `F`: `F_n = (R_n + S F_{n-1}) / (xy)` with
    /// `S = (1+x)(1+y)(x+y)`.
    pub fn solve<C: Ring>(
        &self,
        rhs: &TruncSeries<Laurent<[i32; 2], C>>,
    ) -> TruncSeries<Laurent<[i32; 2], C>> {
        let tail = kernel_tail::<C>();
        let mut out: Vec<Laurent<[i32; 2], C>> = Vec::with_capacity(rhs.order() + 1);
        for n in 0..=rhs.order() {
            let mut acc = rhs.coeff(n).clone();
            if n > 0 {
                acc.add_assign_ref(&tail.mul_ref(&out[n - 1]));
            }
            out.push(acc.shift([-1, -1]));
        }
        TruncSeries::from_coeffs(out)
    }
}

/// `P(x) = t(1+x) O(x,0)` and `Q(y) = t(1+y) O(0,y)`, each a series in its
/// own variable.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundarySeries<C: Ring> {
    pub p: TruncSeries<Laurent<i32, C>>,
    pub q: TruncSeries<Laurent<i32, C>>,
}

impl<C: Ring> BoundarySeries<C> {
    pub fn from_complete(o: &TruncSeries<Laurent<[i32; 2], C>>) -> Self {
        let one_plus = TruncSeries::constant(
            Laurent::from_terms([(0, C::one()), (1, C::one())]),
            o.order(),
        );
        Self {
            p: (&one_plus * &o.y_slice(0)).shift(1),
            q: (&one_plus * &o.x_slice(0)).shift(1),
        }
    }

    /// Every `x`-exponent of `P` and `Q` is at least 1.
    pub fn strictly_positive(&self) -> bool {
        let pos = |s: &TruncSeries<Laurent<i32, C>>| {
            s.coeffs()
                .iter()
                .all(|c| c.min_exponent().is_none_or(|e| e >= 1))
        };
        pos(&self.p) && pos(&self.q)
    }
}

/// Complete generating function of `(i,j)`-stars in `mode`, from the DP.
pub fn star_series(
    i: u32,
    j: u32,
    mode: Mode,
    order: usize,
) -> TruncSeries<crate::series::LaurentPoly2> {
    enumerate_dp(WalkerSystem::star(i, j, mode), order as u32)
        .complete_gf()
        .expect("three walkers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{poly1, LaurentPoly2, Rational};

    #[test]
    fn kernel_at_zero_t_is_xy() {
        let k = Kernel::new(2).bivariate::<Rational>();
        assert_eq!(k.coeff(0), &crate::series::xy_pow(1, 1));
        assert_eq!(k.coeff(1).len(), 7);
    }

    #[test]
    fn y0_cancels_kernel() {
        let n = 10;
        let ev = Evaluator::new(n).unwrap();
        let x = TruncSeries::constant(poly1(&[(1, 1)]), n);
        assert!(Kernel::new(n).at(&x, ev.y0()).is_zero());
    }

    #[test]
    fn solve_inverts_multiplication() {
        let o: TruncSeries<LaurentPoly2> = star_series(1, 2, Mode::Osculating, 5);
        let k = Kernel::new(5).bivariate::<Rational>();
        assert_eq!(Kernel::new(5).solve(&(&k * &o)), o);
    }

    #[test]
    fn boundary_support() {
        let o = star_series(1, 1, Mode::Osculating, 6);
        assert!(BoundarySeries::from_complete(&o).strictly_positive());
    }
}
