use super::orbit::{expected_orbit, orbit, phi, psi, Evaluator, Monomial, OrbitPair};
use super::{star_series, BoundarySeries, Kernel};
use crate::closed_forms::{osculating_from_vicious, osculation_refined_gf};
use crate::enumerator::{enumerate_dp, Mode, WalkerSystem};
use crate::error::{reject_zero_zero, Error, Result};
use crate::report::{CheckReport, IdentityCheck};
use crate::series::{
    poly1, rat, solve_t, Laurent, LaurentPoly1, LaurentPoly2, LaurentPoly2U, Rational, Ring,
    TruncSeries, UPoly,
};

/// Truncation orders: bivariate residuals, and univariate corollaries
/// obtained by setting `x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOrders {
    pub bivariate: usize,
    pub univariate: usize,
}

impl CheckOrders {
    /// `order` for bivariate residuals, at least 25 for univariate ones.
    pub fn from_order(order: usize) -> Self {
        Self {
            bivariate: order,
            univariate: order.max(25),
        }
    }
}

impl Default for CheckOrders {
    fn default() -> Self {
        Self::from_order(8)
    }
}

fn x_plus_y_plus_xy<C: Ring>() -> Laurent<[i32; 2], C> {
    Laurent::from_terms([([1, 0], C::one()), ([0, 1], C::one()), ([1, 1], C::one())])
}

fn framed_pairs() -> Vec<OrbitPair> {
    orbit().into_iter().filter(|p| p.framed).collect()
}

/// `t/(1+t)`.
fn t_over_one_plus_t(order: usize) -> TruncSeries<Rational> {
    let one_plus = TruncSeries::from_terms([(0, rat(1)), (1, rat(1))], order);
    TruncSeries::t(order) * one_plus.invert().expect("1 + t is invertible")
}

/// `X^{i+1} Y^{j+1} / (X+Y+XY)` on the kernel, as `t X^i Y^j (1+X+Y)/(1+t)`.
fn framed_rhs(ev: &mut Evaluator, i: u32, j: u32, p: OrbitPair) -> TruncSeries<LaurentPoly1> {
    let c = t_over_one_plus_t(ev.order());
    let base = p.x.pow(i as i32) * p.y.pow(j as i32);
    ev.combination(&[(c.clone(), base), (c.clone(), base * p.x), (c, base * p.y)])
}

/// `P(x) + Q(1/x)` predicted by the three framed equations.
fn p_minus_q_rhs(ev: &mut Evaluator, i: u32, j: u32) -> TruncSeries<LaurentPoly1> {
    let f = framed_pairs();
    let r: Vec<_> = f.iter().map(|&p| framed_rhs(ev, i, j, p)).collect();
    &(&r[0] - &r[1]) + &r[2]
}

/// `T^{j+1}/(1+2T) - T^{i+j+1}/(2+T) + T^{i+1}/(1+2T)`.
fn p1_plus_q1(i: u32, j: u32, order: usize) -> Result<TruncSeries<Rational>> {
    let t_ser = solve_t(order);
    let one = TruncSeries::<Rational>::one(order);
    let a = (&one + &t_ser.scale(&rat(2))).invert()?;
    let b = (&TruncSeries::constant(rat(2), order) + &t_ser).invert()?;
    Ok(&(&(&t_ser.pow(j + 1) * &a) - &(&t_ser.pow(i + j + 1) * &b)) + &(&t_ser.pow(i + 1) * &a))
}

/// `K O - x^{i+1} y^{j+1} + (x+y+xy)(P(x) + Q(y))` with every series from
/// the enumerator. With `with_boundary` false the boundary terms are
/// dropped, which must leave a nonzero residual.
pub fn main_equation_residual(
    i: u32,
    j: u32,
    order: usize,
    with_boundary: bool,
) -> TruncSeries<LaurentPoly2> {
    let o = star_series(i, j, Mode::Osculating, order);
    let k = Kernel::new(order).bivariate::<Rational>();
    let start = TruncSeries::constant(crate::series::xy_pow(i as i32 + 1, j as i32 + 1), order);
    let mut res = &(&k * &o) - &start;
    if with_boundary {
        let b = BoundarySeries::from_complete(&o);
        let sum = &b.p.embed_x() + &b.q.embed_y();
        res = &res + &sum.mul_coeff(&x_plus_y_plus_xy());
    }
    res
}

/// The main functional equation against enumerated series.
pub fn check_main_equation(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let mut rep = CheckReport::new("main-eq", Some((i, j)), order);
    rep.push(IdentityCheck::residual(
        "K(x,y)O(x,y) = x^(i+1)y^(j+1) - (x+y+xy)(P(x)+Q(y))",
        &main_equation_residual(i, j, order, true),
    ));
    let o = star_series(i, j, Mode::Osculating, order);
    rep.push(IdentityCheck::holds(
        "P has coefficients in xQ[x], Q in yQ[y]",
        order,
        BoundarySeries::from_complete(&o).strictly_positive(),
    ));
    Ok(rep)
}

/// The orbit of `(x, Y0)`: symbolic structure and kernel cancellation.
pub fn check_orbit(order: usize) -> Result<CheckReport> {
    if order < 1 {
        return Err(Error::Invalid("the orbit check needs order >= 1".into()));
    }
    let mut rep = CheckReport::new("orbit", None, order);
    let o = orbit();
    rep.push(IdentityCheck::holds(
        "orbit of (x, Y0) closes after 6 pairs",
        0,
        o.len() == 6 && o[..] == expected_orbit()[..],
    ));
    rep.push(IdentityCheck::holds(
        "phi and psi are involutions on the orbit",
        0,
        o.iter().all(|&p| phi(phi(p)) == p && psi(psi(p)) == p),
    ));
    rep.push(IdentityCheck::holds(
        "exactly the first three pairs are framed",
        0,
        o.iter()
            .map(|p| p.framed)
            .eq([true, true, true, false, false, false]),
    ));

    let mut ev = Evaluator::new(order)?;
    let x = TruncSeries::constant(poly1(&[(1, 1)]), order);
    rep.push(IdentityCheck::residual(
        "K(x, Y0) = 0",
        &Kernel::new(order).at(&x, ev.y0()),
    ));
    for p in &o {
        let (lift, k) = ev.kernel_cleared(*p);
        let name = if lift > 0 {
            format!("Y0^{lift} K{p} = 0")
        } else {
            format!("K{p} = 0")
        };
        rep.push(IdentityCheck::residual(name, &k));
    }

    // alpha x^2 + beta x Y0 + gamma Y0^2 with K(x,y) = alpha y^2 + beta y + gamma.
    let alpha = TruncSeries::from_terms([(1, poly1(&[(0, -1), (1, -1)]))], order);
    let beta = TruncSeries::from_terms(
        [
            (0, poly1(&[(1, 1)])),
            (1, poly1(&[(0, -1), (1, -2), (2, -1)])),
        ],
        order,
    );
    let gamma = TruncSeries::from_terms([(1, poly1(&[(1, -1), (2, -1)]))], order);
    let y0 = ev.y0().clone();
    let vieta =
        (&alpha.shift_exponent(2) + &(&beta * &y0).shift_exponent(1)) + (&gamma * &(&y0 * &y0));
    rep.push(IdentityCheck::residual(
        "alpha x^2 + beta x Y0 + gamma Y0^2 = 0",
        &vieta,
    ));

    let one_plus_t = TruncSeries::from_terms([(0, rat(1)), (1, rat(1))], order);
    let t = TruncSeries::<Rational>::t(order);
    for p in framed_pairs() {
        let one = Monomial::new(0, 0);
        let sum = ev.combination(&[
            (TruncSeries::one(order), p.x),
            (TruncSeries::one(order), p.y),
            (TruncSeries::one(order), p.x * p.y),
        ]);
        let plus = ev.combination(&[
            (TruncSeries::one(order), one),
            (TruncSeries::one(order), p.x),
            (TruncSeries::one(order), p.y),
        ]);
        let xy = ev.monomial(p.x * p.y);
        let res = &(&sum * &plus).mul_rational(&t) - &xy.mul_rational(&one_plus_t);
        rep.push(IdentityCheck::residual(
            format!("t(X+Y+XY)(1+X+Y) = (1+t)XY at {p}"),
            &res,
        ));
    }
    Ok(rep)
}

/// The three framed equations, their combination, and its value at `x = 1`.
pub fn check_framed_system(i: u32, j: u32, orders: CheckOrders) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let n = orders.bivariate;
    let mut rep = CheckReport::new("framed-system", Some((i, j)), n);
    let o = star_series(i, j, Mode::Osculating, n);
    let b = BoundarySeries::from_complete(&o);
    let mut ev = Evaluator::new(n)?;
    for p in framed_pairs() {
        let lhs = &ev.apply(&b.p, p.x)? + &ev.apply(&b.q, p.y)?;
        let rhs = framed_rhs(&mut ev, i, j, p);
        rep.push(IdentityCheck::equal(
            format!("P(X) + Q(Y) = X^(i+1)Y^(j+1)/(X+Y+XY) at {p}"),
            &lhs,
            &rhs,
        ));
    }
    let rhs = p_minus_q_rhs(&mut ev, i, j);
    let lhs = &b.p + &b.q.power_map(-1);
    rep.push(IdentityCheck::equal(
        "P(x) + Q(1/x) from the three equations",
        &lhs,
        &rhs,
    ));
    rep.push(IdentityCheck::equal(
        "right-hand side at x = 1 in terms of T",
        &rhs.eval_at_one(),
        &p1_plus_q1(i, j, n)?,
    ));

    let u = orders.univariate;
    let o_long = star_series(i, j, Mode::Osculating, u);
    let bl = BoundarySeries::from_complete(&o_long);
    let pq1 = &bl.p.eval_at_one() + &bl.q.eval_at_one();
    rep.push(IdentityCheck::equal(
        "P(1) + Q(1) = T^(j+1)/(1+2T) - T^(i+j+1)/(2+T) + T^(i+1)/(1+2T)",
        &pq1,
        &p1_plus_q1(i, j, u)?,
    ));
    let one_minus_8t = TruncSeries::from_terms([(0, rat(1)), (1, rat(-8))], u);
    rep.push(IdentityCheck::equal(
        "(1-8t)O(1,1) = 1 - 3P(1) - 3Q(1)",
        &(&one_minus_8t * &o_long.eval_xy_one()),
        &(&TruncSeries::one(u) - &pq1.scale(&rat(3))),
    ));
    Ok(rep)
}

/// `P` and `Q` as the positive and negative parts of the combined framed
/// equations, computed from `Y0` alone.
pub fn reconstruct_boundary(i: u32, j: u32, order: usize) -> Result<BoundarySeries<Rational>> {
    reject_zero_zero(i, j)?;
    let mut ev = Evaluator::new(order)?;
    let rhs = p_minus_q_rhs(&mut ev, i, j);
    if let Some((power, _, _)) = rhs.constant_part().first_nonzero() {
        return Err(Error::NonzeroConstantPart { power });
    }
    Ok(BoundarySeries {
        p: rhs.positive_part(),
        q: rhs.negative_part().power_map(-1),
    })
}

/// Reconstructed boundary series against the enumerator, and the complete
/// series recovered from them through the kernel.
pub fn check_boundary(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("boundary", Some((i, j)), order);
    let rec = reconstruct_boundary(i, j, order)?;
    rep.push(IdentityCheck::holds(
        "x^0 part of P(x) + Q(1/x) vanishes",
        order,
        true,
    ));
    rep.push(IdentityCheck::holds(
        "reconstructed P, Q have strictly positive exponents",
        order,
        rec.strictly_positive(),
    ));
    let o = star_series(i, j, Mode::Osculating, order);
    let enumerated = BoundarySeries::from_complete(&o);
    rep.push(IdentityCheck::holds(
        "enumerated P, Q have strictly positive exponents",
        order,
        enumerated.strictly_positive(),
    ));
    rep.push(IdentityCheck::equal(
        "P = positive part",
        &rec.p,
        &enumerated.p,
    ));
    rep.push(IdentityCheck::equal(
        "Q(1/x) = negative part",
        &rec.q,
        &enumerated.q,
    ));
    let start = TruncSeries::constant(crate::series::xy_pow(i as i32 + 1, j as i32 + 1), order);
    let bnd = (&rec.p.embed_x() + &rec.q.embed_y()).mul_coeff(&x_plus_y_plus_xy());
    let recovered = Kernel::new(order).solve(&(&start - &bnd));
    rep.push(IdentityCheck::equal(
        "O(x,y) recovered through the kernel",
        &recovered,
        &o,
    ));
    Ok(rep)
}

/// `x^i Y0^j - x^-i Y0^(i+j) + x^-(i+j) Y0^i`.
fn w_kernel_rhs(ev: &mut Evaluator, i: u32, j: u32) -> TruncSeries<LaurentPoly1> {
    let (i, j) = (i as i32, j as i32);
    let n = ev.order();
    let one = TruncSeries::one(n);
    ev.combination(&[
        (one.clone(), Monomial::new(i, j)),
        (one.scale(&rat(-1)), Monomial::new(-i, i + j)),
        (one, Monomial::new(-i - j, i)),
    ])
}

/// Quasi-vicious stars, vicious stars, and the equations linking them.
pub fn check_quasivicious(i: u32, j: u32, orders: CheckOrders) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let n = orders.bivariate;
    let mut rep = CheckReport::new("quasivicious", Some((i, j)), n);
    let w = star_series(i, j, Mode::QuasiVicious, n);
    let v = star_series(i, j, Mode::Vicious, n);
    let wx0 = w.y_slice(0);
    let w0y = w.x_slice(0);
    let boundary = &wx0.embed_x() + &w0y.embed_y();
    rep.push(IdentityCheck::equal(
        "V = W - W(x,0) - W(0,y)",
        &v,
        &(&w - &boundary),
    ));

    // (1 + 1/x)(x + y)(1 + 1/y) = 2 + x + y + 1/x + 1/y + y/x + x/y
    let step: LaurentPoly2 = Laurent::from_terms(
        [
            ([0, 0], 2),
            ([1, 0], 1),
            ([0, 1], 1),
            ([-1, 0], 1),
            ([0, -1], 1),
            ([-1, 1], 1),
            ([1, -1], 1),
        ]
        .map(|(e, c)| (e, rat(c))),
    );
    let kern = TruncSeries::from_terms([(0, crate::series::xy_pow(0, 0)), (1, step.neg_ref())], n);
    let start = TruncSeries::constant(crate::series::xy_pow(i as i32, j as i32), n);
    rep.push(IdentityCheck::equal(
        "(1 - t(1+1/x)(x+y)(1+1/y))V = x^i y^j - W(x,0) - W(0,y)",
        &(&kern * &v),
        &(&start - &boundary),
    ));

    let mut ev = Evaluator::new(n)?;
    let rhs = w_kernel_rhs(&mut ev, i, j);
    rep.push(IdentityCheck::equal(
        "W(x,0) + W(0,1/x) = x^i Y0^j - x^-i Y0^(i+j) + x^-(i+j) Y0^i",
        &(&wx0 + &w0y.power_map(-1)),
        &rhs,
    ));
    for p in framed_pairs() {
        let lhs = &ev.apply(&wx0, p.x)? + &ev.apply(&w0y, p.y)?;
        let xy = ev.monomial(p.x.pow(i as i32) * p.y.pow(j as i32));
        rep.push(IdentityCheck::equal(
            format!("W(X,0) + W(0,Y) = X^i Y^j at {p}"),
            &lhs,
            &xy,
        ));
    }
    rep.push(IdentityCheck::residual(
        "x^0 part of the W equation vanishes",
        &rhs.constant_part(),
    ));
    rep.push(IdentityCheck::equal(
        "W(x,0) = positive part",
        &rhs.positive_part(),
        &wx0,
    ));
    rep.push(IdentityCheck::equal(
        "W(0,1/x) = negative part",
        &rhs.negative_part(),
        &w0y.power_map(-1),
    ));

    let u = orders.univariate;
    let w_long = star_series(i, j, Mode::QuasiVicious, u);
    let w_sum = &w_long.y_slice(0).eval_at_one() + &w_long.x_slice(0).eval_at_one();
    let t_ser = solve_t(u);
    let t_form = &(&t_ser.pow(j) - &t_ser.pow(i + j)) + &t_ser.pow(i);
    rep.push(IdentityCheck::equal(
        "W(1,0) + W(0,1) = T^j - T^(i+j) + T^i",
        &w_sum,
        &t_form,
    ));
    let v_long = star_series(i, j, Mode::Vicious, u).eval_xy_one();
    let one_minus_8t = TruncSeries::from_terms([(0, rat(1)), (1, rat(-8))], u);
    rep.push(IdentityCheck::equal(
        "(1-8t)V(1,1) = 1 - W(1,0) - W(0,1)",
        &(&one_minus_8t * &v_long),
        &(&TruncSeries::one(u) - &w_sum),
    ));
    Ok(rep)
}

/// The functional equation with osculations marked by `u`, and its value
/// at `x = y = 1`.
pub fn check_refined_equation(i: u32, j: u32, orders: CheckOrders) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let n = orders.bivariate;
    let mut rep = CheckReport::new("refined", Some((i, j)), n);
    let table = enumerate_dp(WalkerSystem::star(i, j, Mode::Osculating), n as u32);
    let o: TruncSeries<LaurentPoly2U> = table.complete_gf_u()?;
    let b = BoundarySeries::from_complete(&o);
    let k = Kernel::new(n).bivariate::<UPoly>();
    let one_minus_u = UPoly::from_coeffs(vec![rat(1), rat(-1)]);
    let base: LaurentPoly2U = x_plus_y_plus_xy();
    let wp = base.add_ref(&Laurent::monomial([0, 2], one_minus_u.clone()));
    let wq = base.add_ref(&Laurent::monomial([2, 0], one_minus_u));
    let start = TruncSeries::constant(
        Laurent::monomial([i as i32 + 1, j as i32 + 1], UPoly::one()),
        n,
    );
    let rhs = &(&start - &b.p.embed_x().mul_coeff(&wp)) - &b.q.embed_y().mul_coeff(&wq);
    rep.push(IdentityCheck::equal(
        "K O = x^(i+1)y^(j+1) - (x+y+xy+y^2(1-u))P(x) - (x+y+xy+x^2(1-u))Q(y)",
        &(&k * &o),
        &rhs,
    ));
    let plain = table.complete_gf()?;
    rep.push(IdentityCheck::equal(
        "u = 1 gives the unweighted series",
        &o.eval_u(&rat(1)),
        &plain,
    ));

    let u = orders.univariate;
    let long = enumerate_dp(WalkerSystem::star(i, j, Mode::Osculating), u as u32);
    let ol: TruncSeries<LaurentPoly2U> = long.complete_gf_u()?;
    let bl = BoundarySeries::from_complete(&ol);
    let pq1 = &bl.p.eval_at_one() + &bl.q.eval_at_one();
    let tt: TruncSeries<UPoly> = solve_t(u).lift();
    let uu = TruncSeries::constant(UPoly::u(), u);
    let one = TruncSeries::<UPoly>::one(u);
    let two = TruncSeries::constant(UPoly::constant(rat(2)), u);
    let op = &one + &tt;
    let d1 = &(&op * &op) - &(&uu * &(&tt * &tt));
    let d2 = &(&two * &op) - &(&uu * &tt);
    let mid = &(&(&(&two - &uu) + &tt.scale(&rat(2))) * &tt.pow(i + j + 1)) * &d2.invert()?;
    let rhs1 = &(&tt.pow(j + 1) - &mid) + &tt.pow(i + 1);
    rep.push(IdentityCheck::equal(
        "(P(1)+Q(1))((1+T)^2 - uT^2) = T^(j+1) - (2-u+2T)T^(i+j+1)/(2(1+T)-uT) + T^(i+1)",
        &(&pq1 * &d1),
        &rhs1,
    ));
    let one_minus_8t: TruncSeries<UPoly> =
        TruncSeries::from_terms([(0, rat(1)), (1, rat(-8))], u).lift();
    let four_minus_u = &TruncSeries::constant(UPoly::constant(rat(4)), u) - &uu;
    let len = long.length_series_u();
    rep.push(IdentityCheck::equal(
        "(1-8t)O(1,1) = 1 - (4-u)(P(1)+Q(1))",
        &(&one_minus_8t * &len),
        &(&one - &(&four_minus_u * &pq1)),
    ));
    rep.push(IdentityCheck::equal(
        "O(1,1) with osculations marked = refined closed form",
        &len,
        &osculation_refined_gf(i, j, u)?,
    ));
    Ok(rep)
}

/// The boundary series as sums of quasi-vicious boundary series, the
/// on-kernel identity, and the assembled osculating/vicious relation.
pub fn check_prop2_derivation(i: u32, j: u32, order: usize) -> Result<CheckReport> {
    reject_zero_zero(i, j)?;
    let n = order;
    let mut rep = CheckReport::new("prop2", Some((i, j)), n);
    let o = star_series(i, j, Mode::Osculating, n);
    let b = BoundarySeries::from_complete(&o);
    let w = [
        star_series(i, j, Mode::QuasiVicious, n),
        star_series(i + 1, j, Mode::QuasiVicious, n),
        star_series(i, j + 1, Mode::QuasiVicious, n),
    ];
    let one_plus_t = TruncSeries::from_terms([(0, rat(1)), (1, rat(1))], n + 1);
    let scaled = |s: &TruncSeries<LaurentPoly1>| -> Result<TruncSeries<LaurentPoly1>> {
        let ext = TruncSeries::from_coeffs_with_order(s.coeffs().to_vec(), n + 1);
        Ok(ext.mul_rational(&one_plus_t).divide_by_t_power(1)?)
    };
    let wx: TruncSeries<LaurentPoly1> = &(&w[0].y_slice(0) + &w[1].y_slice(0)) + &w[2].y_slice(0);
    let wy: TruncSeries<LaurentPoly1> = &(&w[0].x_slice(0) + &w[1].x_slice(0)) + &w[2].x_slice(0);
    rep.push(IdentityCheck::equal(
        "(1+t)P(x)/t = W_ij(x,0) + W_(i+1)j(x,0) + W_i(j+1)(x,0)",
        &scaled(&b.p)?,
        &wx.truncate(n - 1),
    ));
    rep.push(IdentityCheck::equal(
        "(1+t)Q(y)/t = W_ij(0,y) + W_(i+1)j(0,y) + W_i(j+1)(0,y)",
        &scaled(&b.q)?,
        &wy.truncate(n - 1),
    ));

    let mut ev = Evaluator::new(n)?;
    let t = TruncSeries::<Rational>::t(n);
    let op = TruncSeries::from_terms([(0, rat(1)), (1, rat(1))], n);
    for p in framed_pairs() {
        let one = TruncSeries::one(n);
        let sum = ev.combination(&[
            (one.clone(), p.x),
            (one.clone(), p.y),
            (one.clone(), p.x * p.y),
        ]);
        let plus = ev.combination(&[
            (one.clone(), Monomial::new(0, 0)),
            (one.clone(), p.x),
            (one, p.y),
        ]);
        let xy = ev.monomial(p.x * p.y);
        rep.push(IdentityCheck::residual(
            format!("1/(X+Y+XY) = t(1+X+Y)/((1+t)XY) at {p}"),
            &(&(&sum * &plus).mul_rational(&t) - &xy.mul_rational(&op)),
        ));
    }

    let v = [
        star_series(i, j, Mode::Vicious, n),
        star_series(i + 1, j, Mode::Vicious, n),
        star_series(i, j + 1, Mode::Vicious, n),
    ];
    let rhs = osculating_from_vicious(i, j, [&v[0], &v[1], &v[2]]);
    rep.push(IdentityCheck::equal(
        "(1+t)O = x^i y^j + t(x+y+xy)/(xy)(V_ij + V_(i+1)j + V_i(j+1))",
        &o.mul_rational(&op),
        &rhs,
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_equation_holds() {
        assert!(main_equation_residual(1, 1, 8, true).is_zero());
        assert!(main_equation_residual(0, 1, 8, true).is_zero());
    }

    #[test]
    fn dropping_boundary_breaks_the_equation() {
        // From (0,1) the start contact puts Q at t^1; from (1,1) a zero gap
        // needs one step, so P and Q start at t^2.
        let r = main_equation_residual(0, 1, 4, false);
        assert_eq!(r.first_nonzero().map(|f| f.0), Some(1));
        let r = main_equation_residual(1, 1, 4, false);
        assert_eq!(r.first_nonzero().map(|f| f.0), Some(2));
    }

    #[test]
    fn triple_contact_start_breaks_the_equation() {
        // The equation removes the six illegal moves out of (0,0) once for
        // each zero gap, i.e. twice.
        let r = main_equation_residual(0, 0, 3, true);
        assert_eq!(r.first_nonzero().map(|f| f.0), Some(1));
        assert!(check_main_equation(0, 0, 3).is_err());
    }

    #[test]
    fn orbit_report() {
        let rep = check_orbit(6).unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn framed_system_small() {
        let rep = check_framed_system(
            1,
            1,
            CheckOrders {
                bivariate: 5,
                univariate: 10,
            },
        )
        .unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn boundary_small() {
        let rep = check_boundary(1, 1, 5).unwrap();
        assert!(rep.passed, "{rep}");
        let rec = reconstruct_boundary(1, 1, 3).unwrap();
        let o = star_series(1, 1, Mode::Osculating, 3);
        assert_eq!(rec.p.coeff(1), BoundarySeries::from_complete(&o).p.coeff(1));
    }

    #[test]
    fn quasivicious_small() {
        let rep = check_quasivicious(
            1,
            1,
            CheckOrders {
                bivariate: 5,
                univariate: 10,
            },
        )
        .unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn refined_small() {
        let rep = check_refined_equation(
            1,
            1,
            CheckOrders {
                bivariate: 5,
                univariate: 10,
            },
        )
        .unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn prop2_small() {
        for (i, j) in [(1, 1), (0, 1)] {
            let rep = check_prop2_derivation(i, j, 5).unwrap();
            assert!(rep.passed, "{rep}");
        }
    }
}
