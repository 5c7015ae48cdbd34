//! Executable verifiers for the identities tying the families together.
//!
//! Each verifier walks its parameter grid, computes both sides as canonical
//! values and compares them structurally. A failing identity is data: the
//! report carries the first counterexample instead of an error.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combinatorics::{binomial, falling_factorial, multinomial, StirlingTable, XPoly};
use crate::error::Result;
use crate::exactnum::{Poly, QRatFunc};
use crate::families::{Context, Path, XArg};
use crate::powerseries::factorial;
use crate::ring::{rat, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `Bl_n(x|l) = (1/[2]) sum_m l^m E_m(x/l) S1(n,m)`, and the integral of `C(x + l y, n)`.
    BooleEulerS1,
    /// `sum_n Bl_n(x|l) S2(m,n) = (1/[2]) E_m(x/l) l^m`.
    BooleEulerS2,
    /// Order-k Boole numbers as multinomial convolutions of order-1 numbers.
    OrderKConvolution,
    /// `Bl^(k)_n(l) = (1/[2]^k) sum_l S1(n,l) l^l E^(k)_l`.
    OrderKNumbersS1,
    /// `sum_n Bl^(k)_n(l) S2(m,n) = (1/[2]^k) E^(k)_m l^m`.
    OrderKNumbersS2,
    /// `Bl^(k)_n(x|l) = sum_m C(n,m) Bl^(k)_{n-m}(l) (x)_m`.
    FallingFactorialExpansion,
    /// `sum_n Bl^(k)_n(x|l) S2(m,n) = (1/[2]^k) l^m E^(k)_m(x/l)`.
    OrderKPolyS2,
    /// `Bl^(k)_n(x|l) = (1/[2]^k) sum_l S1(n,l) l^l E^(k)_l(x/l)`.
    OrderKPolyS1,
    /// Both Stirling transforms of the second kind.
    SecondKindTransforms,
    /// `[2] Bl_n(x|1) = Ch_n(x)`.
    ChangheeReduction,
    /// Second kind at `l` equals first kind at `-l`.
    SecondKindReflection,
    /// `(-1)^n [2] Bl_n(x|l)/n! = [2] sum_{m=1}^n C(n-1,m-1) Bl^_m(-x|l)/m!`.
    NegatedBinomialReflection,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::BooleEulerS1,
        IdentityId::BooleEulerS2,
        IdentityId::OrderKConvolution,
        IdentityId::OrderKNumbersS1,
        IdentityId::OrderKNumbersS2,
        IdentityId::FallingFactorialExpansion,
        IdentityId::OrderKPolyS2,
        IdentityId::OrderKPolyS1,
        IdentityId::SecondKindTransforms,
        IdentityId::ChangheeReduction,
        IdentityId::SecondKindReflection,
        IdentityId::NegatedBinomialReflection,
    ];

    /// Stable selector used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            IdentityId::BooleEulerS1 => "thm2.1",
            IdentityId::BooleEulerS2 => "thm2.2",
            IdentityId::OrderKConvolution => "cor2.3",
            IdentityId::OrderKNumbersS1 => "thm2.4",
            IdentityId::OrderKNumbersS2 => "thm2.5",
            IdentityId::FallingFactorialExpansion => "thm2.6",
            IdentityId::OrderKPolyS2 => "thm2.7",
            IdentityId::OrderKPolyS1 => "thm2.8",
            IdentityId::SecondKindTransforms => "thm2.9",
            IdentityId::ChangheeReduction => "eq2.13",
            IdentityId::SecondKindReflection => "eq2.35",
            IdentityId::NegatedBinomialReflection => "reflection",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        let s = s.to_ascii_lowercase();
        Self::ALL.into_iter().find(|i| i.id() == s)
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::BooleEulerS1 => "q-Boole as S1-transform of q-Euler; integral of binomial",
            IdentityId::BooleEulerS2 => "S2-transform of q-Boole is scaled q-Euler",
            IdentityId::OrderKConvolution => "order-k q-Boole numbers as multinomial convolution",
            IdentityId::OrderKNumbersS1 => "order-k q-Boole numbers as S1-transform",
            IdentityId::OrderKNumbersS2 => "S2-transform of order-k q-Boole numbers",
            IdentityId::FallingFactorialExpansion => "order-k q-Boole polynomials in falling factorials",
            IdentityId::OrderKPolyS2 => "S2-transform of order-k q-Boole polynomials",
            IdentityId::OrderKPolyS1 => "order-k q-Boole polynomials as S1-transform",
            IdentityId::SecondKindTransforms => "second-kind q-Boole Stirling transforms",
            IdentityId::ChangheeReduction => "[2]_q Bl(x|1) equals q-Changhee",
            IdentityId::SecondKindReflection => "second kind at lambda is first kind at -lambda",
            IdentityId::NegatedBinomialReflection => "negated-binomial reflection between kinds",
        }
    }

    /// Whether the identity ranges over the order `k`.
    pub fn uses_order(self) -> bool {
        matches!(
            self,
            IdentityId::OrderKConvolution
                | IdentityId::OrderKNumbersS1
                | IdentityId::OrderKNumbersS2
                | IdentityId::FallingFactorialExpansion
                | IdentityId::OrderKPolyS2
                | IdentityId::OrderKPolyS1
                | IdentityId::SecondKindReflection
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// How `x` is treated by identities that are polynomial in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XMode {
    /// Identities checked as polynomial identities in `x`.
    Symbolic,
    /// Identities checked at each of these rational points.
    Sampled(Vec<BigRational>),
}

impl XMode {
    fn args(&self) -> Vec<XArg> {
        match self {
            XMode::Symbolic => vec![XArg::symbolic()],
            XMode::Sampled(points) => points.iter().cloned().map(XArg::Value).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranges {
    /// Largest index `n` (or `m`) checked.
    pub n_max: usize,
    /// Largest order `k`, for identities that have one.
    pub k_max: usize,
    pub lambdas: Vec<BigRational>,
    pub x_mode: XMode,
}

impl Ranges {
    /// `lambda` in `{1, 2, 3, -1, -2, 1/2}`, symbolic `x`.
    pub fn standard(n_max: usize, k_max: usize) -> Self {
        Ranges {
            n_max,
            k_max,
            lambdas: standard_lambdas(),
            x_mode: XMode::Symbolic,
        }
    }
}

pub fn standard_lambdas() -> Vec<BigRational> {
    [(1, 1), (2, 1), (3, 1), (-1, 1), (-2, 1), (1, 2)]
        .into_iter()
        .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub lhs: XPoly,
    pub rhs: XPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub ranges: Ranges,
    pub status: Status,
    /// Number of equalities checked before stopping.
    pub cases: usize,
    pub first_counterexample: Option<Counterexample>,
    /// Set when a kernel failed while evaluating a side; the status is then `Fail`.
    pub error: Option<String>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{:<11} {status} ({} cases)", self.identity.id(), self.cases)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "\n  at {}\n  lhs = {}\n  rhs = {}", c.params, c.lhs, c.rhs)?;
        }
        if let Some(e) = &self.error {
            write!(f, "\n  error: {e}")?;
        }
        Ok(())
    }
}

/// Accumulates comparisons and stops at the first mismatch.
struct Checker {
    cases: usize,
    counterexample: Option<Counterexample>,
}

impl Checker {
    fn check(&mut self, params: impl FnOnce() -> String, lhs: XPoly, rhs: XPoly) -> bool {
        self.cases += 1;
        if lhs == rhs {
            true
        } else {
            self.counterexample = Some(Counterexample {
                params: params(),
                lhs,
                rhs,
            });
            false
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }
}

fn qc(r: BigRational) -> QRatFunc {
    QRatFunc::constant(r)
}

fn int_q(i: &BigInt) -> QRatFunc {
    qc(BigRational::from_integer(i.clone()))
}

fn inv_two_q_pow(k: usize) -> QRatFunc {
    QRatFunc::two_q()
        .pow_u(k as u32)
        .inv()
        .expect("(1 + q)^k is nonzero")
}

fn lambda_pow(lambda: &BigRational, e: usize) -> QRatFunc {
    qc(lambda.pow(e as i32))
}

fn inv_factorial(n: usize) -> QRatFunc {
    qc(BigRational::new(BigInt::from(1), factorial(n)))
}

/// All compositions of `n` into `k` non-negative parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `sum_j S1(n, j) lambda^j E_j` over the given Euler values.
fn s1_sum(table: &StirlingTable, n: usize, lambda: &BigRational, euler: &[XPoly]) -> Result<XPoly> {
    let mut acc = XPoly::zero();
    for (j, s) in table.s1_row(n)?.iter().enumerate() {
        let c = &int_q(s) * &lambda_pow(lambda, j);
        acc = &acc + &euler[j].scale(&c);
    }
    Ok(acc)
}

/// `sum_{n <= m} S2(m, n) values_n`.
fn s2_sum(table: &StirlingTable, m: usize, values: &[XPoly]) -> Result<XPoly> {
    let mut acc = XPoly::zero();
    for (n, s) in table.s2_row(m)?.iter().enumerate() {
        acc = &acc + &values[n].scale(&int_q(s));
    }
    Ok(acc)
}

struct Verifier<'a> {
    ctx: &'a mut Context,
    ranges: &'a Ranges,
    checker: Checker,
}

impl Verifier<'_> {
    fn orders(&self, id: IdentityId) -> std::ops::RangeInclusive<usize> {
        if id.uses_order() {
            1..=self.ranges.k_max.max(1)
        } else {
            1..=1
        }
    }

    fn run(&mut self, id: IdentityId) -> Result<()> {
        let n_max = self.ranges.n_max;
        let lambdas = self.ranges.lambdas.clone();
        let xs = self.ranges.x_mode.args();
        let zero = [XArg::zero()];
        let table = self.ctx.stirling().clone();
        let gf = Path::GenFunc;
        let rec = Path::Recurrence;
        for k in self.orders(id) {
            let norm = inv_two_q_pow(k);
            for lambda in &lambdas {
                let inv_lambda = lambda.recip();
                let x_args: &[XArg] = match id {
                    IdentityId::OrderKConvolution
                    | IdentityId::OrderKNumbersS1
                    | IdentityId::OrderKNumbersS2 => &zero,
                    _ => &xs,
                };
                for x in x_args {
                    let label = |idx: &str, i: usize| format!("{idx}={i} k={k} lambda={lambda} x={x}");
                    match id {
                        IdentityId::BooleEulerS1 => {
                            let bl = self.ctx.boole_first_table(1, lambda, x, gf)?;
                            let e = self.ctx.euler_poly_table(1, &x.scaled(&inv_lambda), rec)?;
                            let x_poly = x.apply(&XPoly::var());
                            let mut binom: Poly<XPoly> = Poly::one();
                            for n in 0..=n_max {
                                let rhs = s1_sum(&table, n, lambda, &e)?.scale(&norm);
                                if !self.checker.check(|| label("n", n), bl[n].clone(), rhs) {
                                    return Ok(());
                                }
                                // I_y(C(x + lambda y, n)) = [2]_q / n! Bl_n(x|lambda)
                                let integral = self.ctx.fermionic_integral(&binom);
                                let rhs = bl[n].scale(&(&QRatFunc::two_q() * &inv_factorial(n)));
                                if !self.checker.check(|| label("n", n) + " (integral form)", integral, rhs) {
                                    return Ok(());
                                }
                                // C(a, n+1) = C(a, n) (a - n) / (n + 1)
                                let shift = x_poly.sub_ref(&XPoly::from_int(n as i64));
                                let factor = Poly::new(vec![shift, XPoly::constant(qc(lambda.clone()))]);
                                binom = (&binom * &factor).scale(&XPoly::constant(qc(BigRational::new(
                                    BigInt::from(1),
                                    BigInt::from(n + 1),
                                ))));
                            }
                        }
                        IdentityId::BooleEulerS2 => {
                            let bl = self.ctx.boole_first_table(1, lambda, x, gf)?;
                            let e = self.ctx.euler_poly_table(1, &x.scaled(&inv_lambda), rec)?;
                            for m in 0..=n_max {
                                let lhs = s2_sum(&table, m, &bl)?;
                                let rhs = e[m].scale(&(&norm * &lambda_pow(lambda, m)));
                                if !self.checker.check(|| label("m", m), lhs, rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::OrderKConvolution => {
                            let blk = self.ctx.boole_first_table(k, lambda, x, gf)?;
                            let bl1 = self.ctx.boole_first_table(1, lambda, x, gf)?;
                            for n in 0..=n_max {
                                let mut rhs = XPoly::zero();
                                for parts in compositions(n, k) {
                                    let c = int_q(&multinomial(n, &parts)?);
                                    let prod = parts
                                        .iter()
                                        .fold(XPoly::one(), |acc, &l| &acc * &bl1[l]);
                                    rhs = &rhs + &prod.scale(&c);
                                }
                                if !self.checker.check(|| label("n", n), blk[n].clone(), rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::OrderKNumbersS1 | IdentityId::OrderKPolyS1 => {
                            let blk = self.ctx.boole_first_table(k, lambda, x, gf)?;
                            let e = self.ctx.euler_poly_table(k, &x.scaled(&inv_lambda), rec)?;
                            for n in 0..=n_max {
                                let rhs = s1_sum(&table, n, lambda, &e)?.scale(&norm);
                                if !self.checker.check(|| label("n", n), blk[n].clone(), rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::OrderKNumbersS2 | IdentityId::OrderKPolyS2 => {
                            let blk = self.ctx.boole_first_table(k, lambda, x, gf)?;
                            let e = self.ctx.euler_poly_table(k, &x.scaled(&inv_lambda), rec)?;
                            for m in 0..=n_max {
                                let lhs = s2_sum(&table, m, &blk)?;
                                let rhs = e[m].scale(&(&norm * &lambda_pow(lambda, m)));
                                if !self.checker.check(|| label("m", m), lhs, rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::FallingFactorialExpansion => {
                            let blk = self.ctx.boole_first_table(k, lambda, x, gf)?;
                            let numbers = self.ctx.boole_first_table(k, lambda, &XArg::zero(), gf)?;
                            for n in 0..=n_max {
                                let mut rhs = XPoly::zero();
                                for m in 0..=n {
                                    let term = x
                                        .apply(&falling_factorial(m))
                                        .mul_ref(&numbers[n - m])
                                        .scale(&int_q(&binomial(n, m)));
                                    rhs = &rhs + &term;
                                }
                                if !self.checker.check(|| label("n", n), blk[n].clone(), rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::SecondKindTransforms => {
                            let hat = self.ctx.boole_second_table(1, lambda, x, gf)?;
                            let e = self.ctx.euler_poly_table(1, &x.scaled(&-&inv_lambda), rec)?;
                            let neg_lambda = -lambda;
                            for m in 0..=n_max {
                                let lhs = s2_sum(&table, m, &hat)?;
                                let rhs = e[m].scale(&(&norm * &lambda_pow(&neg_lambda, m)));
                                if !self.checker.check(|| label("m", m) + " (S2 display)", lhs, rhs) {
                                    return Ok(());
                                }
                                // sum_l S1(m,l) (-1)^l lambda^l = sum_l S1(m,l) (-lambda)^l
                                let rhs = s1_sum(&table, m, &neg_lambda, &e)?.scale(&norm);
                                if !self.checker.check(|| label("m", m) + " (S1 display)", hat[m].clone(), rhs) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::ChangheeReduction => {
                            let bl = self.ctx.boole_first_table(1, &rat(1), x, gf)?;
                            let ch = self.ctx.changhee_table(x)?;
                            for n in 0..=n_max {
                                let lhs = bl[n].scale(&QRatFunc::two_q());
                                if !self.checker.check(|| format!("n={n} x={x}"), lhs, ch[n].clone()) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::SecondKindReflection => {
                            let hat = self.ctx.boole_second_table(k, lambda, x, gf)?;
                            let bl = self.ctx.boole_first_table(k, &-lambda, x, gf)?;
                            for n in 0..=n_max {
                                if !self.checker.check(|| label("n", n), hat[n].clone(), bl[n].clone()) {
                                    return Ok(());
                                }
                            }
                        }
                        IdentityId::NegatedBinomialReflection => {
                            let bl = self.ctx.boole_first_table(1, lambda, x, gf)?;
                            let hat = self.ctx.boole_second_table(1, lambda, &x.negated(), gf)?;
                            let two = QRatFunc::two_q();
                            for n in 1..=n_max {
                                let sign = if n % 2 == 0 { 1 } else { -1 };
                                let lhs = bl[n].scale(&(&(&two * &inv_factorial(n)) * &QRatFunc::from_int(sign)));
                                let mut rhs = XPoly::zero();
                                for m in 1..=n {
                                    let c = &int_q(&binomial(n - 1, m - 1)) * &inv_factorial(m);
                                    rhs = &rhs + &hat[m].scale(&c);
                                }
                                let rhs = rhs.scale(&two);
                                if !self.checker.check(|| label("n", n), lhs, rhs) {
                                    return Ok(());
                                }
                            }
                        }
                    }
                    if self.checker.failed() {
                        return Ok(());
                    }
                }
                if id == IdentityId::ChangheeReduction {
                    // lambda plays no role
                    break;
                }
            }
        }
        Ok(())
    }
}

/// Runs one verifier with a fresh context sized to `ranges.n_max`.
pub fn verify(id: IdentityId, ranges: &Ranges) -> IdentityReport {
    let mut ctx = Context::new(ranges.n_max);
    verify_in(&mut ctx, id, ranges)
}

/// Runs one verifier inside an existing context (sharing its caches and
/// Stirling table).
pub fn verify_in(ctx: &mut Context, id: IdentityId, ranges: &Ranges) -> IdentityReport {
    let start = Instant::now();
    let mut v = Verifier {
        ctx,
        ranges,
        checker: Checker {
            cases: 0,
            counterexample: None,
        },
    };
    let outcome = if ranges.n_max > v.ctx.n_max() {
        Err(crate::Error::IndexBeyondContext {
            n: ranges.n_max,
            n_max: v.ctx.n_max(),
        })
    } else {
        v.run(id)
    };
    let error = outcome.err().map(|e| e.to_string());
    let status = if error.is_none() && !v.checker.failed() {
        Status::Pass
    } else {
        Status::Fail
    };
    IdentityReport {
        identity: id,
        ranges: ranges.clone(),
        status,
        cases: v.checker.cases,
        first_counterexample: v.checker.counterexample,
        error,
        elapsed: start.elapsed(),
    }
}

/// Runs the selected verifiers concurrently, one context per identity, and
/// returns the reports in the order of `ids`. `stirling` overrides the
/// table every context uses.
pub fn verify_suite(
    ids: &[IdentityId],
    ranges: &Ranges,
    stirling: Option<&StirlingTable>,
) -> Vec<IdentityReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                scope.spawn(move || {
                    let mut ctx = match stirling {
                        Some(t) => Context::with_stirling(t.clone()),
                        None => Context::new(ranges.n_max),
                    };
                    verify_in(&mut ctx, id, ranges)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    })
}
