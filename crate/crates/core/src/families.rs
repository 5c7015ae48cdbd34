//! The q-Euler, q-Boole (both kinds, any order) and q-Changhee families.
//!
//! Every family is available through at least two independent routes:
//!
//! * **generating function**: coefficient extraction from the defining
//!   series in `t`, built with [`FormalSeries`] inversion and products;
//! * **Stirling transform** (Boole families) or **recurrence** (Euler
//!   numbers): sums over `S1(n, l) lambda^l E^(k)_l(x / lambda)`, with the
//!   Euler numbers taken from the moment recurrence
//!   `q * sum_l C(n, l) E_l + E_n = 0` of the fermionic functional.
//!
//! Normalizations: `Bl^(k)_n(x|lambda)` is `n! [t^n]` of
//! `(1 / (1 + q (1 + t)^lambda))^k (1 + t)^x`, so `Bl^(k)_0(0|lambda) = 1/(1+q)^k`.
//! The second kind uses `((1+t)^lambda / (q + (1+t)^lambda))^k (1+t)^x`.
//! Changhee uses `[2]_q / ([2]_q + q t) (1 + t)^x`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{binomial, falling_factorial, StirlingTable, XPoly};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, QPoly, QRatFunc};
use crate::powerseries::{factorial, FormalSeries};
use crate::ring::{rat, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    QEulerNumber,
    QEulerPoly,
    QBooleFirst,
    QBooleSecond,
    QChanghee,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::QEulerNumber => "euler-number",
            Family::QEulerPoly => "euler",
            Family::QBooleFirst => "boole1",
            Family::QBooleSecond => "boole2",
            Family::QChanghee => "changhee",
        }
    }

    pub fn uses_lambda(self) -> bool {
        matches!(self, Family::QBooleFirst | Family::QBooleSecond)
    }

    /// Routes implemented for this family; the first is the default.
    pub fn paths(self) -> &'static [Path] {
        match self {
            Family::QEulerNumber | Family::QEulerPoly => &[Path::GenFunc, Path::Recurrence],
            Family::QBooleFirst => &[Path::GenFunc, Path::StirlingTransform],
            Family::QBooleSecond => &[Path::GenFunc, Path::Reflection, Path::StirlingTransform],
            Family::QChanghee => &[Path::GenFunc],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    /// Coefficient extraction from the generating function.
    GenFunc,
    /// Moment recurrence plus Cauchy convolution for higher orders.
    Recurrence,
    /// First-kind Stirling expansion over q-Euler polynomials.
    StirlingTransform,
    /// Second kind as the first kind at `-lambda`.
    Reflection,
}

impl Path {
    pub fn name(self) -> &'static str {
        match self {
            Path::GenFunc => "genfunc",
            Path::Recurrence => "recurrence",
            Path::StirlingTransform => "stirling",
            Path::Reflection => "reflection",
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The argument `x` of a family: either the indeterminate scaled by a
/// rational (`c * x`, with `c = 1` the plain symbolic case) or a rational
/// value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XArg {
    Symbolic { scale: BigRational },
    Value(BigRational),
}

impl XArg {
    pub fn symbolic() -> Self {
        XArg::Symbolic { scale: rat(1) }
    }

    pub fn value(v: BigRational) -> Self {
        XArg::Value(v)
    }

    pub fn zero() -> Self {
        XArg::Value(rat(0))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, XArg::Symbolic { .. })
    }

    /// The argument `c * self`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        match self {
            XArg::Symbolic { scale } => XArg::Symbolic { scale: scale * c },
            XArg::Value(v) => XArg::Value(v * c),
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(&rat(-1))
    }

    /// Substitutes this argument into a polynomial in `x`. A numeric argument
    /// yields a constant polynomial.
    pub fn apply(&self, p: &XPoly) -> XPoly {
        match self {
            XArg::Symbolic { scale } if Ring::is_one(scale) => p.clone(),
            XArg::Symbolic { scale } => p.scale_var(&QRatFunc::constant(scale.clone())),
            XArg::Value(v) => XPoly::constant(p.eval(&QRatFunc::constant(v.clone()))),
        }
    }
}

impl fmt::Display for XArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XArg::Symbolic { scale } if Ring::is_one(scale) => write!(f, "x"),
            XArg::Symbolic { scale } => write!(f, "{scale}*x"),
            XArg::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Rings the fermionic functional can take values in: Q(q)-algebras.
pub trait QAlgebra: Ring {
    fn from_qratfunc(c: &QRatFunc) -> Self;
}

impl QAlgebra for QRatFunc {
    fn from_qratfunc(c: &QRatFunc) -> Self {
        c.clone()
    }
}

impl QAlgebra for XPoly {
    fn from_qratfunc(c: &QRatFunc) -> Self {
        XPoly::constant(c.clone())
    }
}

/// Family value: a scalar in Q(q) for numeric `x`, a polynomial in `x` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(QRatFunc),
    Symbolic(XPoly),
}

impl Value {
    fn from_xpoly(p: XPoly, x: &XArg) -> Self {
        if x.is_symbolic() {
            Value::Symbolic(p)
        } else {
            Value::Scalar(p.coeff(0))
        }
    }

    pub fn as_xpoly(&self) -> XPoly {
        match self {
            Value::Scalar(c) => XPoly::constant(c.clone()),
            Value::Symbolic(p) => p.clone(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Symbolic(p) => write!(f, "{p}"),
        }
    }
}

/// One member of a family together with how it was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyValue {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub lambda: Option<BigRational>,
    pub x: XArg,
    pub path: Path,
    pub value: Value,
}

/// `q -> 1` image of a family value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalValue {
    Scalar(BigRational),
    /// Polynomial in `x` over Q, lowest degree first.
    Poly(Poly<BigRational>),
}

/// Evaluates every Q(q) coefficient at `q = 1`.
pub fn classical_limit(v: &FamilyValue) -> Result<ClassicalValue> {
    let one = rat(1);
    match &v.value {
        Value::Scalar(c) => Ok(ClassicalValue::Scalar(c.eval_at_q(&one)?)),
        Value::Symbolic(p) => Ok(ClassicalValue::Poly(xpoly_at_q(p, &one)?)),
    }
}

/// Coefficientwise evaluation of a polynomial in `x` at a rational `q`.
pub fn xpoly_at_q(p: &XPoly, q0: &BigRational) -> Result<Poly<BigRational>> {
    p.try_map(|c| c.eval_at_q(q0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct TableKey {
    family: Family,
    path: Path,
    k: usize,
    lambda: Option<BigRational>,
    x: XArg,
}

/// Memoizing computation context.
///
/// Owns a Stirling table sized to `n_max` and caches every family table it
/// computes (indices `0..=n_max`). A context is single-writer; use one per
/// thread.
#[derive(Clone, Debug)]
pub struct Context {
    n_max: usize,
    stirling: StirlingTable,
    /// Order-1 q-Euler numbers from the moment recurrence; grows on demand.
    euler_moments: Vec<QRatFunc>,
    euler_numbers: HashMap<usize, Arc<[QRatFunc]>>,
    tables: HashMap<TableKey, Arc<[XPoly]>>,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

fn check_lambda(lambda: &BigRational) -> Result<()> {
    if Ring::is_zero(lambda) {
        Err(Error::ZeroLambda)
    } else {
        Ok(())
    }
}

fn int_rat(i: &BigInt) -> BigRational {
    BigRational::from_integer(i.clone())
}

fn lift(s: &FormalSeries<QRatFunc>) -> FormalSeries<XPoly> {
    s.map(|c| XPoly::constant(c.clone()))
}

/// `(1 + t)^x` with coefficients `(x)_m / m!` in Q[x].
fn symbolic_binomial_series(order: usize) -> FormalSeries<XPoly> {
    FormalSeries::from_fn(order, |m| {
        falling_factorial(m).scale(&QRatFunc::constant(BigRational::new(
            BigInt::from(1),
            factorial(m),
        )))
    })
}

/// `e^{xt}` with coefficients `x^m / m!`.
fn symbolic_exp_series(order: usize) -> FormalSeries<XPoly> {
    FormalSeries::from_fn(order, |m| {
        XPoly::monomial(
            QRatFunc::constant(BigRational::new(BigInt::from(1), factorial(m))),
            m,
        )
    })
}

/// `n! [t^n]` of `kernel * (1 + t)^x` for every `n <= order`.
fn extract_with_binomial(kernel: &FormalSeries<QRatFunc>, x: &XArg) -> Vec<XPoly> {
    let order = kernel.order();
    match x {
        XArg::Value(v) => kernel
            .mul(&FormalSeries::binomial_power(v, order))
            .egf_coefficients()
            .into_iter()
            .map(XPoly::constant)
            .collect(),
        XArg::Symbolic { .. } => lift(kernel)
            .mul(&symbolic_binomial_series(order))
            .egf_coefficients()
            .iter()
            .map(|p| x.apply(p))
            .collect(),
    }
}

/// `n! [t^n]` of `kernel * e^{xt}` for every `n <= order`.
fn extract_with_exp(kernel: &FormalSeries<QRatFunc>, x: &XArg) -> Vec<XPoly> {
    let order = kernel.order();
    match x {
        XArg::Value(v) => {
            let e = FormalSeries::from_fn(order, |m| {
                QRatFunc::constant(v.pow(m as i32) / int_rat(&factorial(m)))
            });
            kernel
                .mul(&e)
                .egf_coefficients()
                .into_iter()
                .map(XPoly::constant)
                .collect()
        }
        XArg::Symbolic { .. } => lift(kernel)
            .mul(&symbolic_exp_series(order))
            .egf_coefficients()
            .iter()
            .map(|p| x.apply(p))
            .collect(),
    }
}

/// `(1 / (1 + q (1 + t)^lambda))^k`.
fn boole_first_kernel(k: usize, lambda: &BigRational, order: usize) -> Result<FormalSeries<QRatFunc>> {
    let q = QRatFunc::q();
    let den = FormalSeries::<QRatFunc>::binomial_power(lambda, order)
        .scale(&q)
        .add(&FormalSeries::one(order));
    Ok(den.inverse()?.pow(k))
}

/// `((1 + t)^lambda / (q + (1 + t)^lambda))^k`.
fn boole_second_kernel(k: usize, lambda: &BigRational, order: usize) -> Result<FormalSeries<QRatFunc>> {
    let power = FormalSeries::<QRatFunc>::binomial_power(lambda, order);
    let den = power.add(&FormalSeries::constant(QRatFunc::q(), order));
    Ok(power.mul(&den.inverse()?).pow(k))
}

/// `([2]_q / (q e^t + 1))^k`.
fn euler_kernel(k: usize, order: usize) -> Result<FormalSeries<QRatFunc>> {
    let q = QRatFunc::q();
    let den = FormalSeries::<QRatFunc>::exp(order)
        .scale(&q)
        .add(&FormalSeries::one(order));
    Ok(den.inverse()?.scale(&QRatFunc::two_q()).pow(k))
}

/// `[2]_q / ([2]_q + q t)`.
fn changhee_kernel(order: usize) -> Result<FormalSeries<QRatFunc>> {
    let two = QRatFunc::two_q();
    let den = FormalSeries::from_prefix(vec![two.clone(), QRatFunc::q()], order);
    Ok(den.inverse()?.scale(&two))
}

/// q-Euler numbers of order `k` for indices `0..=n_max`, read off the
/// generating function `([2]_q / (q e^t + 1))^k`.
pub fn euler_numbers_genfunc(k: usize, n_max: usize) -> Result<Vec<QRatFunc>> {
    check_k(k)?;
    Ok(euler_kernel(k, n_max)?.egf_coefficients())
}

impl Context {
    pub fn new(n_max: usize) -> Self {
        Self::with_stirling(StirlingTable::new(n_max))
    }

    /// Context over a caller-supplied table; `n_max` is the table's size.
    pub fn with_stirling(stirling: StirlingTable) -> Self {
        Context {
            n_max: stirling.n_max(),
            stirling,
            euler_moments: vec![QRatFunc::one()],
            euler_numbers: HashMap::new(),
            tables: HashMap::new(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn stirling(&self) -> &StirlingTable {
        &self.stirling
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            Err(Error::IndexBeyondContext { n, n_max: self.n_max })
        } else {
            Ok(())
        }
    }

    /// `E_{0..=upto, q}` from `(1 + q) E_n = -q sum_{l<n} C(n, l) E_l`, `E_0 = 1`.
    fn euler_moments(&mut self, upto: usize) -> &[QRatFunc] {
        let q = QRatFunc::q();
        let inv_two_q = QRatFunc::two_q().inv().expect("1 + q is nonzero");
        let factor = (&q * &inv_two_q).neg_ref();
        while self.euler_moments.len() <= upto {
            let n = self.euler_moments.len();
            let s = self
                .euler_moments
                .iter()
                .enumerate()
                .fold(QRatFunc::zero(), |acc, (l, e)| {
                    acc + e.scale_rational(&int_rat(&binomial(n, l)))
                });
            self.euler_moments.push(&factor * &s);
        }
        &self.euler_moments[..=upto]
    }

    /// q-Euler numbers of order `k`, indices `0..=n_max`, via the moment
    /// recurrence and `k - 1` binomial convolutions.
    pub fn euler_numbers(&mut self, k: usize) -> Result<Arc<[QRatFunc]>> {
        check_k(k)?;
        if let Some(v) = self.euler_numbers.get(&k) {
            return Ok(v.clone());
        }
        let n_max = self.n_max;
        let base = self.euler_moments(n_max).to_vec();
        let mut acc = base.clone();
        for _ in 1..k {
            acc = (0..=n_max)
                .map(|n| {
                    (0..=n).fold(QRatFunc::zero(), |s, l| {
                        s + (&acc[l] * &base[n - l]).scale_rational(&int_rat(&binomial(n, l)))
                    })
                })
                .collect();
        }
        let v: Arc<[QRatFunc]> = acc.into();
        self.euler_numbers.insert(k, v.clone());
        Ok(v)
    }

    pub fn q_euler_number(&mut self, n: usize, k: usize, path: Path) -> Result<QRatFunc> {
        self.check_n(n)?;
        match path {
            Path::Recurrence => Ok(self.euler_numbers(k)?[n].clone()),
            Path::GenFunc => Ok(euler_numbers_genfunc(k, n)?.swap_remove(n)),
            other => Err(Error::UnsupportedPath {
                family: Family::QEulerNumber.name(),
                path: other.name(),
            }),
        }
    }

    fn cached(
        &mut self,
        key: TableKey,
        build: impl FnOnce(&mut Self) -> Result<Vec<XPoly>>,
    ) -> Result<Arc<[XPoly]>> {
        if let Some(t) = self.tables.get(&key) {
            return Ok(t.clone());
        }
        let t: Arc<[XPoly]> = build(self)?.into();
        self.tables.insert(key, t.clone());
        Ok(t)
    }

    /// `E^(k)_{n,q}(x)` for `n = 0..=n_max`.
    pub fn euler_poly_table(&mut self, k: usize, x: &XArg, path: Path) -> Result<Arc<[XPoly]>> {
        check_k(k)?;
        let key = TableKey {
            family: Family::QEulerPoly,
            path,
            k,
            lambda: None,
            x: x.clone(),
        };
        let n_max = self.n_max;
        self.cached(key, |ctx| match path {
            Path::GenFunc => Ok(extract_with_exp(&euler_kernel(k, n_max)?, x)),
            Path::Recurrence => {
                // E^(k)_n(x) = sum_l C(n, l) E^(k)_l x^(n-l)
                let numbers = ctx.euler_numbers(k)?;
                Ok((0..=n_max)
                    .map(|n| {
                        let p = XPoly::new(
                            (0..=n)
                                .map(|d| numbers[n - d].scale_rational(&int_rat(&binomial(n, d))))
                                .collect(),
                        );
                        x.apply(&p)
                    })
                    .collect())
            }
            other => Err(Error::UnsupportedPath {
                family: Family::QEulerPoly.name(),
                path: other.name(),
            }),
        })
    }

    pub fn q_euler_poly(&mut self, n: usize, k: usize, x: &XArg, path: Path) -> Result<XPoly> {
        self.check_n(n)?;
        Ok(self.euler_poly_table(k, x, path)?[n].clone())
    }

    /// The fermionic q-functional on polynomials in `y`: linear, with moments
    /// `y^n -> E_{n,q}`. It is the unique linear functional with
    /// `q I(f(y + 1)) + I(f(y)) = [2]_q f(0)`.
    pub fn fermionic_integral<R: QAlgebra>(&mut self, f: &Poly<R>) -> R {
        let Some(deg) = f.degree() else {
            return R::zero();
        };
        let moments = self.euler_moments(deg);
        f.coeffs()
            .iter()
            .zip(moments)
            .fold(R::zero(), |acc, (c, e)| acc.add_ref(&c.mul_ref(&R::from_qratfunc(e))))
    }

    /// `Bl^(k)_{n,q}(x|lambda)` for `n = 0..=n_max`.
    pub fn boole_first_table(
        &mut self,
        k: usize,
        lambda: &BigRational,
        x: &XArg,
        path: Path,
    ) -> Result<Arc<[XPoly]>> {
        check_k(k)?;
        check_lambda(lambda)?;
        let key = TableKey {
            family: Family::QBooleFirst,
            path,
            k,
            lambda: Some(lambda.clone()),
            x: x.clone(),
        };
        let n_max = self.n_max;
        self.cached(key, |ctx| match path {
            Path::GenFunc => Ok(extract_with_binomial(&boole_first_kernel(k, lambda, n_max)?, x)),
            Path::StirlingTransform => ctx.stirling_transform(k, lambda, x),
            other => Err(Error::UnsupportedPath {
                family: Family::QBooleFirst.name(),
                path: other.name(),
            }),
        })
    }

    /// `(1 / [2]_q^k) sum_l S1(n, l) lambda^l E^(k)_{l,q}(x / lambda)`.
    fn stirling_transform(&mut self, k: usize, lambda: &BigRational, x: &XArg) -> Result<Vec<XPoly>> {
        let inner = x.scaled(&lambda.recip());
        let euler = self.euler_poly_table(k, &inner, Path::Recurrence)?;
        let norm = QRatFunc::two_q().pow_u(k as u32).inv()?;
        let mut out = Vec::with_capacity(self.n_max + 1);
        for n in 0..=self.n_max {
            let row = self.stirling.s1_row(n)?;
            let mut acc = XPoly::zero();
            for (l, s) in row.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let c = int_rat(s) * lambda.pow(l as i32);
                acc = &acc + &euler[l].scale(&QRatFunc::constant(c));
            }
            out.push(acc.scale(&norm));
        }
        Ok(out)
    }

    pub fn q_boole_first(
        &mut self,
        n: usize,
        k: usize,
        lambda: &BigRational,
        x: &XArg,
        path: Path,
    ) -> Result<XPoly> {
        self.check_n(n)?;
        Ok(self.boole_first_table(k, lambda, x, path)?[n].clone())
    }

    /// Second-kind `Bl^(k)_{n,q}(x|lambda)` (hatted in the literature) for `n = 0..=n_max`.
    pub fn boole_second_table(
        &mut self,
        k: usize,
        lambda: &BigRational,
        x: &XArg,
        path: Path,
    ) -> Result<Arc<[XPoly]>> {
        check_k(k)?;
        check_lambda(lambda)?;
        let key = TableKey {
            family: Family::QBooleSecond,
            path,
            k,
            lambda: Some(lambda.clone()),
            x: x.clone(),
        };
        let n_max = self.n_max;
        self.cached(key, |ctx| match path {
            Path::GenFunc => Ok(extract_with_binomial(&boole_second_kernel(k, lambda, n_max)?, x)),
            Path::Reflection => Ok(ctx
                .boole_first_table(k, &-lambda, x, Path::GenFunc)?
                .to_vec()),
            // sum_l S1(n, l) (-lambda)^l E^(k)_l(-x / lambda) / [2]_q^k is the
            // first-kind transform at -lambda.
            Path::StirlingTransform => ctx.stirling_transform(k, &-lambda, x),
            other => Err(Error::UnsupportedPath {
                family: Family::QBooleSecond.name(),
                path: other.name(),
            }),
        })
    }

    pub fn q_boole_second(
        &mut self,
        n: usize,
        k: usize,
        lambda: &BigRational,
        x: &XArg,
        path: Path,
    ) -> Result<XPoly> {
        self.check_n(n)?;
        Ok(self.boole_second_table(k, lambda, x, path)?[n].clone())
    }

    /// `Ch_{n,q}(x)` for `n = 0..=n_max`.
    pub fn changhee_table(&mut self, x: &XArg) -> Result<Arc<[XPoly]>> {
        let key = TableKey {
            family: Family::QChanghee,
            path: Path::GenFunc,
            k: 1,
            lambda: None,
            x: x.clone(),
        };
        let n_max = self.n_max;
        self.cached(key, |_| Ok(extract_with_binomial(&changhee_kernel(n_max)?, x)))
    }

    pub fn q_changhee(&mut self, n: usize, x: &XArg) -> Result<XPoly> {
        self.check_n(n)?;
        Ok(self.changhee_table(x)?[n].clone())
    }

    /// Single entry point used by front ends.
    pub fn evaluate(
        &mut self,
        family: Family,
        n: usize,
        k: usize,
        lambda: Option<&BigRational>,
        x: &XArg,
        path: Path,
    ) -> Result<FamilyValue> {
        check_k(k)?;
        self.check_n(n)?;
        if !family.paths().contains(&path) {
            return Err(Error::UnsupportedPath {
                family: family.name(),
                path: path.name(),
            });
        }
        let need_lambda = || lambda.ok_or(Error::MissingLambda);
        let (x, poly) = match family {
            Family::QEulerNumber => {
                let v = self.q_euler_number(n, k, path)?;
                (XArg::zero(), XPoly::constant(v))
            }
            Family::QEulerPoly => (x.clone(), self.q_euler_poly(n, k, x, path)?),
            Family::QBooleFirst => (x.clone(), self.q_boole_first(n, k, need_lambda()?, x, path)?),
            Family::QBooleSecond => (x.clone(), self.q_boole_second(n, k, need_lambda()?, x, path)?),
            Family::QChanghee => {
                if k != 1 {
                    return Err(Error::UnsupportedPath {
                        family: family.name(),
                        path: "order k > 1",
                    });
                }
                (x.clone(), self.q_changhee(n, x)?)
            }
        };
        Ok(FamilyValue {
            family,
            n,
            k,
            lambda: if family.uses_lambda() { lambda.cloned() } else { None },
            value: Value::from_xpoly(poly, &x),
            x,
            path,
        })
    }
}

/// `(1 + q)^e` as a polynomial.
pub fn one_plus_q_pow(e: usize) -> QPoly {
    QPoly::new(vec![rat(1), rat(1)]).pow_u(e as u32)
}
