use osculate::series::{
    int_series, rat, solve_t, solve_y0, Laurent, LaurentPoly1, Rational, TruncSeries,
};
use proptest::prelude::*;

fn rational_series(len: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(-20i64..20, len).prop_map(|c| int_series(&c))
}

fn unit_series(len: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(-20i64..20, len - 1).prop_map(|mut c| {
        c.insert(0, 1);
        int_series(&c)
    })
}

fn laurent_series(len: usize) -> impl Strategy<Value = TruncSeries<LaurentPoly1>> {
    prop::collection::vec(prop::collection::vec((-4i32..5, -9i64..10), 0..5), len).prop_map(
        |coeffs| {
            TruncSeries::from_coeffs(
                coeffs
                    .into_iter()
                    .map(|terms| Laurent::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c)))))
                    .collect(),
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in rational_series(7), b in rational_series(7), c in rational_series(7)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, TruncSeries::zero(6));
        prop_assert_eq!(&a * &TruncSeries::one(6), a.clone());
    }

    #[test]
    fn laurent_ring_axioms(a in laurent_series(5), b in laurent_series(5), c in laurent_series(5)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverse_is_inverse(s in unit_series(9)) {
        prop_assert_eq!(&s * &s.invert().unwrap(), TruncSeries::one(8));
    }

    #[test]
    fn sqrt_squares_back(s in unit_series(9)) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn parts_recompose(s in laurent_series(6)) {
        let sum = &(&s.positive_part() + &s.negative_part()) + &s.constant_part();
        prop_assert_eq!(sum, s.clone());
        prop_assert!(s.positive_part().coeffs().iter().all(|c| c.min_exponent().is_none_or(|e| e > 0)));
        prop_assert!(s.negative_part().coeffs().iter().all(|c| c.max_exponent().is_none_or(|e| e < 0)));
    }

    #[test]
    fn power_map_is_a_ring_map(a in laurent_series(5), b in laurent_series(5), k in -3i32..4) {
        prop_assume!(k != 0);
        prop_assert_eq!((&a * &b).power_map(k), &a.power_map(k) * &b.power_map(k));
    }

    #[test]
    fn derivative_is_a_derivation(a in rational_series(8), b in rational_series(8)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b.truncate(6)) + &(&a.truncate(6) * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn t_satisfies_its_equation_to_order_30() {
    let t = solve_t(30);
    let one = TruncSeries::one(30);
    let sq = &(&one + &t) * &(&one + &t);
    assert_eq!(t, &TruncSeries::monomial(rat(2), 1, 30) * &sq);
}

#[test]
fn y0_at_one_is_t() {
    let y0 = solve_y0(12, 14).unwrap();
    assert_eq!(y0.eval_at_one(), solve_t(12));
}
