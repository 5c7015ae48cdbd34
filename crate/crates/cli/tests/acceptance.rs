//! Acceptance suite. Run with `cargo test -p qboole-cli --test acceptance`.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//! Every comparison is exact; the time limits are checked against wall clock.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qboole_cli::encode::{decode_value, Decoded, TableRecord};
use qboole_core::families::one_plus_q_pow;
use qboole_core::identities::standard_lambdas;
use qboole_core::{
    classical_limit, verify_suite, BigRational, ClassicalValue, Context, Family, IdentityId, Path,
    Poly, QPoly, QRatFunc, Ranges, Ring, StirlingTable, Value, XArg, XPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn fr(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn fact(n: usize) -> BigRational {
    (1..=n as i64).fold(r(1), |acc, i| acc * r(i))
}

/// Truncated product of two coefficient lists over a ring.
fn mul_trunc<R: Ring>(a: &[R], b: &[R], len: usize) -> Vec<R> {
    let mut out = vec![R::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].add_ref(&ai.mul_ref(bj));
        }
    }
    out
}

/// Reciprocal of a plain rational series with nonzero constant term.
fn recip(a: &[BigRational]) -> Vec<BigRational> {
    let mut b = vec![r(0); a.len()];
    b[0] = r(1) / &a[0];
    for n in 1..a.len() {
        let s = (1..=n).fold(r(0), |acc, i| acc + &a[i] * &b[n - i]);
        b[n] = -s / &a[0];
    }
    b
}

/// Coefficients of `(1 + t)^alpha` up to `t^(len-1)`.
fn binom_series(alpha: &BigRational, len: usize) -> Vec<BigRational> {
    let mut c = vec![r(1)];
    for m in 1..len {
        let next = &c[m - 1] * (alpha - r(m as i64 - 1)) / r(m as i64);
        c.push(next);
    }
    c
}

/// Coefficients of `(1 + t)^x` as polynomials in `x` over Q.
fn binom_series_x(len: usize) -> Vec<QPoly> {
    let mut c = vec![QPoly::constant(r(1))];
    for m in 1..len {
        let factor = QPoly::new(vec![r(1 - m as i64), r(1)]).scale(&fr(1, m as i64));
        let next = c[m - 1].mul_ref(&factor);
        c.push(next);
    }
    c
}

/// `n! [t^n]` of `prefactor(t) * (1 + t)^x`, as a polynomial in `x`.
fn egf_with_power_x(prefactor: &[BigRational], n_max: usize) -> Vec<QPoly> {
    let len = n_max + 1;
    let px: Vec<QPoly> = prefactor.iter().take(len).cloned().map(QPoly::constant).collect();
    mul_trunc(&px, &binom_series_x(len), len)
        .into_iter()
        .enumerate()
        .map(|(n, p)| p.scale(&fact(n)))
        .collect()
}

fn classical_poly(v: &qboole_core::FamilyValue) -> Result<QPoly, String> {
    match classical_limit(v).map_err(|e| e.to_string())? {
        ClassicalValue::Poly(p) => Ok(p),
        ClassicalValue::Scalar(c) => Ok(QPoly::constant(c)),
    }
}

fn dual_path() -> Outcome {
    let mut ctx = Context::new(12);
    let x = XArg::symbolic();
    let mut cases = 0;
    for k in 1..=3 {
        for lambda in standard_lambdas() {
            let gf = ctx
                .boole_first_table(k, &lambda, &x, Path::GenFunc)
                .map_err(|e| e.to_string())?;
            let st = ctx
                .boole_first_table(k, &lambda, &x, Path::StirlingTransform)
                .map_err(|e| e.to_string())?;
            for n in 0..=12 {
                if gf[n] != st[n] {
                    return Err(format!("n={n} k={k} lambda={lambda}: {} != {}", gf[n], st[n]));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} equalities"))
}

fn all_verifiers() -> Outcome {
    let mut ids: Vec<IdentityId> = IdentityId::ALL
        .iter()
        .copied()
        .filter(|&id| id != IdentityId::NegatedBinomialReflection)
        .collect();
    let mut reports = verify_suite(&ids, &Ranges::standard(12, 3), None);
    ids = vec![IdentityId::NegatedBinomialReflection];
    reports.extend(verify_suite(&ids, &Ranges::standard(10, 3), None));
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    match reports.iter().find(|r| !r.passed()) {
        Some(bad) => Err(bad.to_string()),
        None => Ok(format!("{} identities, {cases} equalities", reports.len())),
    }
}

fn stirling() -> Outcome {
    const N: usize = 12;
    let t = StirlingTable::new(N);
    let s1 = |n, m| BigRational::from_integer(t.stirling1(n, m).unwrap());
    let s2 = |n, m| BigRational::from_integer(t.stirling2(n, m).unwrap());
    for n in 0..=N {
        for j in 0..=N {
            let delta = if n == j { r(1) } else { r(0) };
            let a = (j..=n).fold(r(0), |acc, m| acc + s1(n, m) * s2(m, j));
            let b = (j..=n).fold(r(0), |acc, m| acc + s2(n, m) * s1(m, j));
            if n >= j && (a != delta || b != delta) {
                return Err(format!("orthogonality fails at n={n} j={j}"));
            }
        }
    }
    let len = N + 1;
    let log1p: Vec<BigRational> = (0..len)
        .map(|n| if n == 0 { r(0) } else { fr(if n % 2 == 1 { 1 } else { -1 }, n as i64) })
        .collect();
    let expm1: Vec<BigRational> = (0..len)
        .map(|n| if n == 0 { r(0) } else { r(1) / fact(n) })
        .collect();
    let mut lp = vec![r(0); len];
    let mut ep = vec![r(0); len];
    lp[0] = r(1);
    ep[0] = r(1);
    for m in 0..=N {
        for n in 0..=N {
            let want1 = if m <= n { s1(n, m) } else { r(0) };
            let want2 = if m <= n { s2(n, m) } else { r(0) };
            if &lp[n] * fact(n) / fact(m) != want1 {
                return Err(format!("log(1+t)^{m} disagrees with S1 at n={n}"));
            }
            if &ep[n] * fact(n) / fact(m) != want2 {
                return Err(format!("(e^t-1)^{m} disagrees with S2 at n={n}"));
            }
        }
        lp = mul_trunc(&lp, &log1p, len);
        ep = mul_trunc(&ep, &expm1, len);
    }
    Ok(format!("n, j <= {N}"))
}

/// A random element of Q[q] of degree at most 2.
fn random_coefficient(rng: &mut ChaCha8Rng) -> QRatFunc {
    let terms = rng.gen_range(1..=3);
    QRatFunc::from_poly(QPoly::new(
        (0..terms).map(|_| fr(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect(),
    ))
}

fn functional_equation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut ctx = Context::new(16);
    let q = QRatFunc::q();
    let two_q = QRatFunc::two_q();
    for trial in 0..100 {
        let degree = rng.gen_range(0..=10);
        let f: Poly<QRatFunc> =
            Poly::new((0..=degree).map(|_| random_coefficient(&mut rng)).collect());
        let one = QRatFunc::constant(r(1));
        let lhs = q.mul_ref(&ctx.fermionic_integral(&f.shift(&one))) + ctx.fermionic_integral(&f);
        let rhs = two_q.mul_ref(&f.eval(&QRatFunc::zero()));
        if lhs != rhs {
            return Err(format!("one-step form fails on trial {trial}: {lhs} != {rhs}"));
        }
        for n in 1..=5usize {
            let shift = QRatFunc::constant(r(n as i64));
            let sign = |e: usize| if e.is_multiple_of(2) { r(1) } else { r(-1) };
            let lhs = q.pow_u(n as u32).mul_ref(&ctx.fermionic_integral(&f.shift(&shift)))
                + ctx.fermionic_integral(&f).scale_rational(&sign(n - 1));
            let sum = (0..n).fold(QRatFunc::zero(), |acc, l| {
                let fl = f.eval(&QRatFunc::constant(r(l as i64)));
                acc + q.pow_u(l as u32).mul_ref(&fl).scale_rational(&sign(n - 1 - l))
            });
            let rhs = two_q.mul_ref(&sum);
            if lhs != rhs {
                return Err(format!("{n}-step form fails on trial {trial}"));
            }
        }
    }
    Ok("100 polynomials, shifts 1..=5".into())
}

fn classical_limits() -> Outcome {
    const N: usize = 10;
    let one = r(1);
    let mut ctx = Context::new(N);

    // 2 / (e^t + 1) over Q.
    let ep1: Vec<BigRational> =
        (0..=7).map(|n| if n == 0 { r(2) } else { r(1) / fact(n) }).collect();
    let oracle: Vec<BigRational> =
        recip(&ep1).iter().enumerate().map(|(n, c)| c * r(2) * fact(n)).collect();
    let listed = [r(1), fr(-1, 2), r(0), fr(1, 4), r(0), fr(-1, 2), r(0), fr(17, 8)];
    if oracle != listed {
        return Err(format!("oracle disagrees with the listed values: {oracle:?}"));
    }
    for path in [Path::GenFunc, Path::Recurrence] {
        for (n, want) in listed.iter().enumerate() {
            let got = ctx
                .q_euler_number(n, 1, path)
                .and_then(|e| e.eval_at_q(&one))
                .map_err(|e| e.to_string())?;
            if &got != want {
                return Err(format!("E_{n} via {path} at q=1 is {got}, expected {want}"));
            }
        }
    }

    // Changhee: 2 / (t + 2) (1 + t)^x.
    let mut half = vec![r(0); N + 1];
    half[0] = r(1);
    half[1] = fr(1, 2);
    let ch_pref = recip(&half);
    let ch = egf_with_power_x(&ch_pref, N);
    let x = XArg::symbolic();
    for (n, ch_n) in ch.iter().enumerate() {
        let bl = ctx
            .evaluate(Family::QBooleFirst, n, 1, Some(&one), &x, Path::GenFunc)
            .map_err(|e| e.to_string())?;
        let twice = classical_poly(&bl)?.scale(&r(2));
        if &twice != ch_n {
            return Err(format!("2 Bl_{n}(x|1) at q=1 is {twice}, expected {ch_n}"));
        }
        let qch = ctx
            .evaluate(Family::QChanghee, n, 1, None, &x, Path::GenFunc)
            .map_err(|e| e.to_string())?;
        if &classical_poly(&qch)? != ch_n {
            return Err(format!("Ch_{n} at q=1 differs from the classical polynomial"));
        }
    }

    // Boole: 1 / (1 + (1 + t)^lambda) (1 + t)^x.
    for lambda in standard_lambdas() {
        let mut denom = binom_series(&lambda, N + 1);
        denom[0] += r(1);
        let bl = egf_with_power_x(&recip(&denom), N);
        for (n, want) in bl.iter().enumerate() {
            for path in [Path::GenFunc, Path::StirlingTransform] {
                let v = ctx
                    .evaluate(Family::QBooleFirst, n, 1, Some(&lambda), &x, path)
                    .map_err(|e| e.to_string())?;
                let got = classical_poly(&v)?;
                if &got != want {
                    return Err(format!("Bl_{n}(x|{lambda}) via {path} at q=1 is {got}, expected {want}"));
                }
            }
        }
    }
    Ok(format!("n <= {N}"))
}

fn divides(d: &QPoly, e: usize) -> bool {
    one_plus_q_pow(e).div_rem(d).map(|(_, rem)| rem.degree().is_none()).unwrap_or(false)
}

fn structure() -> Outcome {
    const N: usize = 12;
    let mut ctx = Context::new(N);
    let x = XArg::symbolic();
    let e1 = ctx.euler_numbers(1).map_err(|e| e.to_string())?;
    for (n, e) in e1.iter().enumerate() {
        if !divides(e.denominator(), n) {
            return Err(format!("denominator of E_{n} is {}", e.denominator()));
        }
    }
    let mut checked = 0;
    for k in 1..=3 {
        let lead = QRatFunc::two_q().powi(-(k as i32)).unwrap();
        for lambda in standard_lambdas() {
            for family in [Family::QBooleFirst, Family::QBooleSecond] {
                for n in 0..=N {
                    let v = ctx
                        .evaluate(family, n, k, Some(&lambda), &x, Path::GenFunc)
                        .map_err(|e| e.to_string())?;
                    let p: XPoly = v.value.as_xpoly();
                    let at = format!("{family} n={n} k={k} lambda={lambda}");
                    if p.degree() != Some(n) {
                        return Err(format!("{at}: degree {:?}", p.degree()));
                    }
                    if p.leading() != Some(&lead) {
                        return Err(format!("{at}: leading coefficient {}", p.coeff(n)));
                    }
                    if let Some(c) = p.coeffs().iter().find(|c| !divides(c.denominator(), n + k)) {
                        return Err(format!("{at}: coefficient {c} has a stray denominator"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} polynomials"))
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qboole"))
        .args(args)
        .output()
        .expect("failed to launch qboole")
}

fn cli() -> Outcome {
    let table = [
        "table", "--family", "boole2", "--n-max", "10", "--order", "2", "--lambda", "1/2",
    ];
    let a = run_cli(&table);
    let b = run_cli(&table);
    if a.status.code() != Some(0) || a.stdout != b.stdout {
        return Err("table output is not reproducible".into());
    }
    let records: Vec<TableRecord> = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
    let mut ctx = Context::new(10);
    let lambda = fr(1, 2);
    for rec in &records {
        let want = ctx
            .evaluate(Family::QBooleSecond, rec.n, 2, Some(&lambda), &XArg::symbolic(), Path::GenFunc)
            .map_err(|e| e.to_string())?;
        let got = decode_value(&rec.value).map_err(|e| e.to_string())?;
        if got != Decoded::Exact(want.value.clone()) {
            return Err(format!("round trip differs at n={}", rec.n));
        }
        if let Value::Scalar(_) = want.value {
            return Err("symbolic x produced a scalar".into());
        }
    }

    let verify = ["verify", "--identity", "all", "--n-max", "8", "--order-max", "2", "--no-timing"];
    let start = Instant::now();
    let v1 = run_cli(&verify);
    let elapsed = start.elapsed();
    if v1.status.code() != Some(0) {
        return Err(format!("verify exited with {:?}", v1.status.code()));
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("verify took {elapsed:.1?}"));
    }
    let v2 = run_cli(&verify);
    if v1.stdout != v2.stdout {
        return Err("verify report is not reproducible".into());
    }
    Ok(format!("{} records round-tripped; verify all in {elapsed:.1?}", records.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 dual-path agreement (genfunc vs Stirling transform)", Duration::from_secs(30), dual_path),
        ("2 identity verifiers, n <= 12, k <= 3", Duration::from_secs(60), all_verifiers),
        ("3 Stirling orthogonality and series definitions", Duration::from_secs(1), stirling),
        ("4 fermionic functional equation, one- and n-step", Duration::from_secs(5), functional_equation),
        ("5 classical limits at q = 1", Duration::from_secs(60), classical_limits),
        ("6 degree, leading coefficient, denominators", Duration::from_secs(60), structure),
        ("7 CLI determinism and JSON round trip", Duration::from_secs(60), cli),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed < limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; exceeded {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}  [{elapsed:.2?}, limit {limit:?}]  {detail}"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name}  [{elapsed:.2?}, limit {limit:?}]  {e}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
