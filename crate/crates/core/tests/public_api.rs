use qboole_core::{
    verify, BigRational, Context, Family, IdentityId, Path, QPoly, QRatFunc, Ranges, Ring, Value,
    XArg, XPoly,
};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn qpoly(c: &[i64]) -> QPoly {
    QPoly::new(c.iter().map(|&v| r(v, 1)).collect())
}

fn scalar(v: Value) -> QRatFunc {
    match v {
        Value::Scalar(c) => c,
        Value::Symbolic(p) => panic!("expected a scalar, got {p}"),
    }
}

#[test]
fn boole_first_index_two_at_zero() {
    let mut ctx = Context::new(4);
    let lambda = r(2, 1);
    let got = ctx
        .evaluate(Family::QBooleFirst, 2, 1, Some(&lambda), &XArg::zero(), Path::StirlingTransform)
        .unwrap();
    let want = QRatFunc::new(qpoly(&[0, -2, 6]), qpoly(&[1, 3, 3, 1])).unwrap();
    assert_eq!(scalar(got.value), want);
}

#[test]
fn boole_first_index_one_is_linear() {
    let mut ctx = Context::new(3);
    let lambda = r(-3, 2);
    let got = ctx.q_boole_first(1, 1, &lambda, &XArg::symbolic(), Path::GenFunc).unwrap();
    // x / (1 + q) - lambda q / (1 + q)^2
    let two_q = QRatFunc::two_q();
    let c1 = two_q.inv().unwrap();
    let c0 = QRatFunc::q().scale_rational(&-lambda.clone()).div(&two_q.powi(2).unwrap()).unwrap();
    assert_eq!(got, XPoly::new(vec![c0, c1]));
}

#[test]
fn second_kind_is_first_kind_at_negated_lambda() {
    let mut ctx = Context::new(6);
    let x = XArg::symbolic();
    for k in 1..=2 {
        for lambda in [r(1, 1), r(-2, 1), r(1, 3)] {
            let second = ctx.boole_second_table(k, &lambda, &x, Path::GenFunc).unwrap();
            let first = ctx.boole_first_table(k, &-lambda.clone(), &x, Path::GenFunc).unwrap();
            assert_eq!(second, first);
        }
    }
}

#[test]
fn changhee_is_scaled_boole_at_lambda_one() {
    let mut ctx = Context::new(6);
    let x = XArg::symbolic();
    let two_q = XPoly::constant(QRatFunc::two_q());
    for n in 0..=6 {
        let bl = ctx.q_boole_first(n, 1, &r(1, 1), &x, Path::GenFunc).unwrap();
        assert_eq!(two_q.mul_ref(&bl), ctx.q_changhee(n, &x).unwrap());
    }
}

#[test]
fn euler_paths_agree_for_higher_order() {
    let mut ctx = Context::new(8);
    for k in 1..=3 {
        for n in 0..=8 {
            assert_eq!(
                ctx.q_euler_number(n, k, Path::GenFunc).unwrap(),
                ctx.q_euler_number(n, k, Path::Recurrence).unwrap(),
            );
        }
    }
}

#[test]
fn numeric_x_agrees_with_symbolic_evaluation() {
    let mut ctx = Context::new(6);
    let lambda = r(3, 1);
    let x0 = r(-5, 3);
    for n in 0..=6 {
        let sym = ctx.q_boole_first(n, 2, &lambda, &XArg::symbolic(), Path::GenFunc).unwrap();
        let num = ctx.q_boole_first(n, 2, &lambda, &XArg::value(x0.clone()), Path::GenFunc).unwrap();
        assert_eq!(XPoly::constant(sym.eval(&QRatFunc::constant(x0.clone()))), num);
    }
}

#[test]
fn every_identity_passes_on_small_ranges() {
    for id in IdentityId::ALL {
        let report = verify(id, &Ranges::standard(5, 2));
        assert!(report.passed(), "{report}");
        assert!(report.cases > 0, "{id} checked nothing");
    }
}

#[test]
fn zero_lambda_is_rejected() {
    let mut ctx = Context::new(2);
    assert!(ctx
        .evaluate(Family::QBooleFirst, 1, 1, Some(&r(0, 1)), &XArg::symbolic(), Path::GenFunc)
        .is_err());
    assert!(ctx
        .evaluate(Family::QBooleSecond, 1, 1, None, &XArg::symbolic(), Path::GenFunc)
        .is_err());
}
