use num_bigint::BigInt;
use num_rational::BigRational;

use stieltjes_core::bell::{bell_args, complete_bell, BellKind};
use stieltjes_core::hurwitz::{digamma, hurwitz_zeta_real, log_gamma, polygamma, zeta_deriv_at0, CauchyRingParams};
use stieltjes_core::identities::{run_identity, run_suite, Frac, IdentityParams, ParamGrid};
use stieltjes_core::oracle::{oracle_cross_check, stieltjes_cauchy, stieltjes_hasse, StieltjesIndex};
use stieltjes_core::precision::bernoulli;
use stieltjes_core::rational::{
    digamma_rational, gamma1_rational, stieltjes_at_one, stieltjes_rational_bell, stieltjes_rational_cck,
};
use stieltjes_core::{make_context, BigReal, PrecisionContext, RationalArg};

fn assert_close(got: &BigReal, want: &BigReal, tol: &BigReal) {
    let d = (got - want).abs();
    assert!(d < *tol, "got {} want {} (|diff| = {})", got.to_sci(40), want.to_sci(40), d.to_sci(3));
}

fn lit(ctx: &PrecisionContext, s: &str) -> BigReal {
    ctx.parse(s).unwrap()
}

fn tol(ctx: &PrecisionContext, e: i64) -> BigReal {
    ctx.int(10).powi(-e)
}

fn rat(p: u64, q: u64) -> RationalArg {
    RationalArg::new(p, q).unwrap()
}

fn idx(n: u32) -> StieltjesIndex {
    StieltjesIndex::new(n).unwrap()
}

#[test]
fn context_guard_policy() {
    assert!(make_context(50).unwrap().working_digits() >= 70);
    assert!(make_context(1).unwrap().working_digits() >= 21);
    assert!(make_context(1000).unwrap().working_digits() >= 1250);
}

#[test]
fn bernoulli_values() {
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    assert_eq!(bernoulli(0), r(1, 1));
    assert_eq!(bernoulli(1), r(-1, 2));
    assert_eq!(bernoulli(12), r(-691, 2730));
}

#[test]
fn constants() {
    let ctx = make_context(30).unwrap();
    assert_eq!(ctx.fmt(&ctx.euler_gamma()), "5.77215664901532860606512090082e-01");
    assert_eq!(ctx.fmt(&ctx.zeta_int(2).unwrap()), "1.64493406684822643647241516665e+00");
    let c1 = make_context(1).unwrap();
    assert_eq!(c1.fmt(&c1.euler_gamma()), "6e-01");
    let c20 = make_context(20).unwrap();
    assert_eq!(c20.fmt(&c20.zeta_int(3).unwrap()), "1.2020569031595942854e+00");
}

#[test]
fn bell_examples() {
    let r = |n: i64| BigRational::from_integer(BigInt::from(n));
    assert_eq!(complete_bell(&[r(9), r(9)], 0).unwrap(), r(1));
    assert_eq!(complete_bell(&[r(2), r(3)], 2).unwrap(), r(7));
    assert_eq!(complete_bell(&[r(1), r(1), r(1)], 3).unwrap(), r(5));
    assert_eq!(complete_bell(&[r(-1), r(1), r(-1)], 3).unwrap(), r(-5));
}

#[test]
fn bell_argument_sets() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let base = &ctx.euler_gamma() + &ctx.log2pi();
    let z2 = ctx.zeta_int(2).unwrap();
    let g = bell_args(BellKind::G, 1, 2, &ctx).unwrap();
    assert_close(&g.values[0], &-&base, &t);
    assert_close(&g.values[1], &-&(&z2 / &ctx.int(2)), &t);
    let p = bell_args(BellKind::PsiStar, 1, 3, &ctx).unwrap();
    assert_close(&p.values[2], &ctx.zeta_int(3).unwrap().mul_int(2), &t);
    let h = bell_args(BellKind::H, 1, 1, &ctx).unwrap();
    assert_eq!(h.values.len(), 1);
    assert_close(&h.values[0], &-&base, &t);
}

#[test]
fn hurwitz_examples() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let ring = CauchyRingParams::default_for(&ctx);
    let quarter = ctx.ratio(1, 4);
    assert_close(&hurwitz_zeta_real(&ctx.zero(), &quarter, &ctx).unwrap(), &quarter, &t);
    assert_close(&hurwitz_zeta_real(&ctx.int(2), &ctx.one(), &ctx).unwrap(), &ctx.zeta_int(2).unwrap(), &t);
    assert_close(&hurwitz_zeta_real(&ctx.int(-1), &ctx.ratio(1, 3), &ctx).unwrap(), &ctx.ratio(1, 36), &t);
    assert_close(&zeta_deriv_at0(0, &quarter, &ctx, &ring).unwrap(), &quarter, &t);
    let half_log2pi = ctx.log2pi() / ctx.int(2);
    assert_close(&zeta_deriv_at0(1, &ctx.one(), &ctx, &ring).unwrap(), &-&half_log2pi, &t);
    let half_log2 = ctx.int(2).ln() / ctx.int(2);
    assert_close(&zeta_deriv_at0(1, &ctx.ratio(1, 2), &ctx, &ring).unwrap(), &-&half_log2, &t);
}

#[test]
fn gamma_family_examples() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let half = ctx.ratio(1, 2);
    let g = ctx.euler_gamma();
    let ln2 = ctx.int(2).ln();
    assert_close(&log_gamma(&ctx.one(), &ctx).unwrap(), &ctx.zero(), &t);
    assert_close(&log_gamma(&half, &ctx).unwrap(), &(ctx.pi().ln() / ctx.int(2)), &t);
    assert_close(
        &log_gamma(&ctx.ratio(1, 3), &ctx).unwrap(),
        &lit(&ctx, "0.985420646927767069187174036977961391735556496"),
        &t,
    );
    assert_close(&digamma(&ctx.one(), &ctx).unwrap(), &-&g, &t);
    assert_close(&digamma(&half, &ctx).unwrap(), &-&(&g + &ln2.mul_int(2)), &t);
    assert_close(&digamma(&ctx.int(2), &ctx).unwrap(), &(&ctx.one() - &g), &t);
    assert_close(&polygamma(1, &ctx.one(), &ctx).unwrap(), &ctx.zeta_int(2).unwrap(), &t);
    assert_close(&polygamma(2, &ctx.one(), &ctx).unwrap(), &-&ctx.zeta_int(3).unwrap().mul_int(2), &t);
    let pi = ctx.pi();
    assert_close(&polygamma(1, &half, &ctx).unwrap(), &(&(&pi * &pi) / &ctx.int(2)), &t);
}

#[test]
fn oracle_examples() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let ring = CauchyRingParams::default_for(&ctx);
    let g = ctx.euler_gamma();
    let h = stieltjes_hasse(idx(0), &ctx.one(), &ctx, 200).unwrap();
    assert_close(&h.value, &g, &t);
    let h = stieltjes_hasse(idx(0), &ctx.ratio(1, 2), &ctx, 400).unwrap();
    assert_close(&h.value, &(&g + &ctx.int(2).ln().mul_int(2)), &t);
    let h = stieltjes_hasse(idx(1), &ctx.one(), &ctx, 400).unwrap();
    assert_close(&h.value, &lit(&ctx, "-0.0728158454836767248605863758749547"), &t);

    let c = stieltjes_cauchy(idx(0), &ctx.one(), &ctx, &ring).unwrap();
    assert_close(&c.value, &g, &t);
    let c = stieltjes_cauchy(idx(0), &ctx.ratio(1, 4), &ctx, &ring).unwrap();
    assert_close(&c.value, &lit(&ctx, "4.22745353337626540808953014609668357736724444"), &t);
    let c = stieltjes_cauchy(idx(2), &ctx.one(), &ctx, &ring).unwrap();
    assert_close(&c.value, &lit(&ctx, "-0.0096903631928723184845303860352125293590658061"), &t);
}

#[test]
fn oracle_cross_checks() {
    let ctx = make_context(30).unwrap();
    assert!(oracle_cross_check(idx(0), &ctx.one(), &ctx).unwrap().pass);
    let r = oracle_cross_check(idx(1), &ctx.ratio(1, 2), &ctx).unwrap();
    assert!(r.pass);
    assert_close(&r.lhs, &lit(&ctx, "-1.35345968080494151770868716917806440359128629"), ctx.tolerance());
    let c25 = make_context(25).unwrap();
    let r = oracle_cross_check(idx(3), &c25.ratio(2, 3), &c25).unwrap();
    assert!(r.pass);
    assert_close(&r.lhs, &lit(&c25, "-0.0973035546647373214866825469103536101767545784"), c25.tolerance());
}

#[test]
fn rational_examples() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let g = ctx.euler_gamma();
    let ln2 = ctx.int(2).ln();
    assert_close(&stieltjes_rational_bell(0, rat(1, 2), &ctx).unwrap().value, &(&g + &ln2.mul_int(2)), &t);
    assert_close(&stieltjes_rational_bell(0, rat(1, 1), &ctx).unwrap().value, &g, &t);
    assert_close(
        &stieltjes_rational_cck(0, rat(1, 3), &ctx).unwrap().value,
        &-&digamma(&ctx.ratio(1, 3), &ctx).unwrap(),
        &t,
    );
    let b = stieltjes_rational_bell(1, rat(1, 2), &ctx).unwrap().value;
    let c = stieltjes_rational_cck(1, rat(1, 2), &ctx).unwrap().value;
    assert_close(&b, &c, &t);
    assert_close(&b, &lit(&ctx, "-1.35345968080494151770868716917806440359128629"), &t);

    // γ₁(1/4) = (1/2)[2γ₁ - 7log²2 - 6γ log2] - (π/2)[γ + 4log2 + 3logπ - 4lnΓ(1/4)]
    let g1 = stieltjes_at_one(1, &ctx).unwrap().value;
    let pi = ctx.pi();
    let first = (&(&g1.mul_int(2) - &(&ln2 * &ln2).mul_int(7)) - &(&g * &ln2).mul_int(6)) / ctx.int(2);
    let bracket = &(&(&g + &ln2.mul_int(4)) + &pi.ln().mul_int(3)) - &log_gamma(&ctx.ratio(1, 4), &ctx).unwrap().mul_int(4);
    let want = &first - &(&(&pi / &ctx.int(2)) * &bracket);
    assert_close(&stieltjes_rational_bell(1, rat(1, 4), &ctx).unwrap().value, &want, &t);
}

#[test]
fn rational_against_oracle_at_40_digits() {
    let ctx = make_context(40).unwrap();
    let ring = CauchyRingParams::default_for(&ctx);
    let c = stieltjes_rational_cck(2, rat(2, 5), &ctx).unwrap().value;
    let o = stieltjes_cauchy(idx(2), &ctx.ratio(2, 5), &ctx, &ring).unwrap().value;
    assert_close(&c, &o, &tol(&ctx, 25));
    assert_close(&c, &lit(&ctx, "2.10172361962331244012540635726308597658569949"), &tol(&ctx, 25));
}

#[test]
fn at_one_examples() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let ring = CauchyRingParams::default_for(&ctx);
    assert_close(&stieltjes_at_one(0, &ctx).unwrap().value, &ctx.euler_gamma(), &t);
    let zdd = zeta_deriv_at0(2, &ctx.one(), &ctx, &ring).unwrap();
    let b = &ctx.euler_gamma() + &ctx.log2pi();
    let z2 = ctx.zeta_int(2).unwrap();
    let want = &(&zdd + &(&b * &ctx.log2pi())) - &(&(&(&b * &b) - &(&z2 / &ctx.int(2))) / &ctx.int(2));
    assert_close(&stieltjes_at_one(1, &ctx).unwrap().value, &want, &t);
    let o = stieltjes_cauchy(idx(2), &ctx.one(), &ctx, &ring).unwrap().value;
    assert_close(&stieltjes_at_one(2, &ctx).unwrap().value, &o, &t);
}

#[test]
fn digamma_and_gamma1_closed_forms() {
    let ctx = make_context(30).unwrap();
    let t = ctx.tolerance().clone();
    let g = ctx.euler_gamma();
    let ln2 = ctx.int(2).ln();
    assert_close(&digamma_rational(rat(1, 2), &ctx).unwrap(), &-&(&g + &ln2.mul_int(2)), &t);
    let want = -&(&(&g + &ln2.mul_int(3)) + &(&ctx.pi() / &ctx.int(2)));
    assert_close(&digamma_rational(rat(1, 4), &ctx).unwrap(), &want, &t);
    let g15 = gamma1_rational(rat(1, 5), &ctx).unwrap();
    assert_close(&g15, &stieltjes_rational_bell(1, rat(1, 5), &ctx).unwrap().value, &t);
    assert_close(&g15, &lit(&ctx, "-8.0302055110359768876278913466510348539986387"), &t);
}

#[test]
fn identity_examples() {
    let ctx = make_context(30).unwrap();
    let rad = IdentityParams {
        s: Some(Frac::new(-3, 2)),
        p: Some(1),
        q: Some(3),
        ..Default::default()
    };
    assert!(run_identity("rademacher", &rad, &ctx).unwrap().pass);

    let p61 = IdentityParams {
        p: Some(1),
        q: Some(4),
        ..Default::default()
    };
    let r = run_identity("prop-6-1", &p61, &ctx).unwrap();
    assert!(r.pass);
    assert_close(&r.rhs, &-&ctx.pi(), ctx.tolerance());

    let half = IdentityParams {
        p: Some(1),
        q: Some(2),
        ..Default::default()
    };
    let r = run_identity("prop-6-1", &half, &ctx).unwrap();
    assert!(r.pass && r.rhs.is_zero());

    let gm = IdentityParams {
        x: Some(Frac::parse("0.3").unwrap()),
        q: Some(3),
        ..Default::default()
    };
    assert!(run_identity("gauss-mult-gamma", &gm, &ctx).unwrap().pass);

    let ram = IdentityParams {
        x: Some(Frac::new(1, 3)),
        terms: Some(1_000_000),
        ..Default::default()
    };
    let r = run_identity("ramanujan-cos-sum", &ram, &ctx).unwrap();
    assert!(r.pass && r.residual < tol(&ctx, 4));
}

#[test]
fn suite_report_count_matches_grid() {
    let ctx = make_context(30).unwrap();
    let grid = ParamGrid::default();
    let filter = "prop-6-1,prop-6-2,trig-sums";
    let reports = run_suite(Some(filter), &grid, &ctx).unwrap();
    let expected: usize = ["prop-6-1", "prop-6-2", "trig-sums"]
        .iter()
        .map(|n| grid.points(n).unwrap().len())
        .sum();
    assert_eq!(reports.len(), expected);
    assert!(reports.iter().all(|r| r.pass));
    let again = run_suite(Some(filter), &grid, &ctx).unwrap();
    for (a, b) in reports.iter().zip(&again) {
        assert_eq!(a.params, b.params);
        assert_eq!(ctx.fmt(&a.residual), ctx.fmt(&b.residual));
    }
}
