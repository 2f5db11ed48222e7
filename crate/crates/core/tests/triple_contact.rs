use osculate::closed_forms::{
    osculating_complete_gf, osculating_from_vicious, vicious_complete_gf,
};
use osculate::enumerator::{enumerate_dp, Mode, WalkerSystem};
use osculate::kernel::{check_main_equation, main_equation_residual, star_series};
use osculate::series::{rat, Laurent, LaurentPoly2, TruncSeries};
use osculate::Error;

const N: usize = 6;

#[test]
fn triple_contact_admits_only_the_empty_configuration() {
    let t = enumerate_dp(WalkerSystem::star(0, 0, Mode::Osculating), N as u32);
    assert_eq!(t.len(), 1);
    let o = star_series(0, 0, Mode::Osculating, N);
    assert_eq!(
        o,
        TruncSeries::constant(Laurent::monomial([0, 0], rat(1)), N)
    );
}

#[test]
fn vicious_decomposition_misses_triple_contact_at_first_order() {
    let v = [
        vicious_complete_gf(0, 0, N),
        vicious_complete_gf(1, 0, N),
        vicious_complete_gf(0, 1, N),
    ];
    let rhs = osculating_from_vicious(0, 0, [&v[0], &v[1], &v[2]]);
    let o = star_series(0, 0, Mode::Osculating, N);
    let one_plus_t: TruncSeries<LaurentPoly2> = TruncSeries::from_terms(
        [
            (0, Laurent::monomial([0, 0], rat(1))),
            (1, Laurent::monomial([0, 0], rat(1))),
        ],
        N,
    );
    let diff = &(&one_plus_t * &o) - &rhs;
    let (n, m, value) = diff.first_nonzero().expect("the identity must fail here");
    assert_eq!((n, m.x, m.y, value), (1, Some(0), Some(0), rat(1)));
}

#[test]
fn main_equation_fails_from_triple_contact() {
    let r = main_equation_residual(0, 0, N, true);
    assert_eq!(r.first_nonzero().map(|f| f.0), Some(1));
}

#[test]
fn osculating_checks_refuse_triple_contact() {
    assert!(matches!(
        osculating_complete_gf(0, 0, N),
        Err(Error::BadStart { .. })
    ));
    assert!(matches!(
        check_main_equation(0, 0, N),
        Err(Error::BadStart { .. })
    ));
}

#[test]
fn every_other_small_start_satisfies_the_decomposition() {
    for (i, j) in [(0, 1), (1, 0), (1, 1), (2, 0), (0, 2)] {
        let from_dets = osculating_complete_gf(i, j, N).unwrap();
        assert_eq!(
            from_dets,
            star_series(i, j, Mode::Osculating, N),
            "({i},{j})"
        );
    }
}
