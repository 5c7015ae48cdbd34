//! Truncated formal power series in `t` over any [`Ring`].
//!
//! A series of order `N` stores the coefficients of `t^0 ..= t^N`. Binary
//! operations return a series of order `min(N_a, N_b)`; nothing beyond the
//! stated order is ever claimed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{rat, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries<R> {
    coeffs: Vec<R>,
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl<R: Ring> FormalSeries<R> {
    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        FormalSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        FormalSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn from_prefix(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        FormalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_prefix(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_prefix(vec![c], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::from_prefix(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// Drops coefficients above `order`; asking for a higher order is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        FormalSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> FormalSeries<S> {
        FormalSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(self.order().min(rhs.order()), |n| {
            self.coeffs[n].add_ref(&rhs.coeffs[n])
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.order().min(rhs.order()), |n| {
            self.coeffs[n].sub_ref(&rhs.coeffs[n])
        })
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        FormalSeries { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reciprocal; the constant term must be a unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertibleConstant)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut s = R::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    s = s.add_ref(&self.coeffs[i].mul_ref(&out[n - i]));
                }
            }
            out.push(s.mul_ref(&inv0).neg_ref());
        }
        Ok(FormalSeries { coeffs: out })
    }

    /// `self(inner(t))` by Horner's rule on truncated series.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add_ref(c);
        }
        Ok(acc)
    }

    /// `s_n`, or `n! s_n` under the exponential convention.
    pub fn extract_coefficient(&self, n: usize, factorial_normalize: bool) -> Result<R> {
        let c = self.coeffs.get(n).ok_or(Error::IndexBeyondOrder {
            index: n,
            order: self.order(),
        })?;
        if factorial_normalize {
            Ok(c.scale_rational(&BigRational::from_integer(factorial(n))))
        } else {
            Ok(c.clone())
        }
    }

    /// All coefficients under the exponential convention: `n! s_n` for each `n`.
    pub fn egf_coefficients(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale_rational(&BigRational::from_integer(factorial(n))))
            .collect()
    }

    /// `log(1 + t)`: coefficients `(-1)^(n+1) / n`.
    pub fn log1p(order: usize) -> Self {
        Self::from_fn(order, |n| match n {
            0 => R::zero(),
            _ => {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                R::from_rational(&BigRational::new(sign.into(), BigInt::from(n)))
            }
        })
    }

    /// `e^t`.
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |n| {
            R::from_rational(&BigRational::new(BigInt::one(), factorial(n)))
        })
    }

    /// `e^t - 1`.
    pub fn expm1(order: usize) -> Self {
        let mut s = Self::exp(order);
        s.coeffs[0] = R::zero();
        s
    }

    /// `(1 + t)^alpha` for a rational exponent: coefficients `C(alpha, n)`.
    pub fn binomial_power(alpha: &BigRational, order: usize) -> Self {
        let mut c = rat(1);
        Self::from_fn(order, |n| {
            if n > 0 {
                c = &c * (alpha - BigRational::from_integer(BigInt::from(n - 1)))
                    / BigRational::from_integer(BigInt::from(n));
            }
            R::from_rational(&c)
        })
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::exactnum::{QPoly, QRatFunc};
    use crate::ring::frac;

    type RS = FormalSeries<BigRational>;

    fn rs(c: &[BigRational]) -> RS {
        RS::new(c.to_vec())
    }

    fn qrf(num: &[i64], den: &[i64]) -> QRatFunc {
        let p = |c: &[i64]| QPoly::new(c.iter().map(|&v| rat(v)).collect());
        QRatFunc::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn cauchy_products() {
        let a = rs(&[rat(1), rat(1), rat(0)]);
        let b = rs(&[rat(1), rat(-1), rat(0)]);
        assert_eq!(a.mul(&b), rs(&[rat(1), rat(0), rat(-1)]));
        assert_eq!(a.mul(&a), rs(&[rat(1), rat(2), rat(1)]));
        let c = FormalSeries::constant(qrf(&[1], &[1, 1]), 3);
        let d = FormalSeries::constant(qrf(&[1, 1], &[1]), 3);
        assert_eq!(c.mul(&d), FormalSeries::one(3));
    }

    #[test]
    fn mul_takes_min_order() {
        let a = RS::one(5);
        let b = RS::t(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn inverse_first_order_over_qratfunc() {
        // (1+q) + q t
        let s = FormalSeries::new(vec![qrf(&[1, 1], &[1]), QRatFunc::q()]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs()[0], qrf(&[1], &[1, 1]));
        assert_eq!(inv.coeffs()[1], qrf(&[0, -1], &[1, 2, 1]));
    }

    #[test]
    fn inverse_geometric() {
        let s = RS::from_prefix(vec![rat(1), rat(1)], 3);
        assert_eq!(s.inverse().unwrap(), rs(&[rat(1), rat(-1), rat(1), rat(-1)]));
        let z = RS::t(3);
        assert_eq!(z.inverse(), Err(Error::NonInvertibleConstant));
    }

    #[test]
    fn elementary_series() {
        assert_eq!(RS::log1p(3), rs(&[rat(0), rat(1), frac(-1, 2), frac(1, 3)]));
        assert_eq!(RS::expm1(3), rs(&[rat(0), rat(1), frac(1, 2), frac(1, 6)]));
        assert_eq!(RS::exp(2), rs(&[rat(1), rat(1), frac(1, 2)]));
        assert_eq!(RS::expm1(5).compose(&RS::log1p(5)).unwrap(), RS::t(5));
    }

    #[test]
    fn compositions() {
        let outer = RS::from_prefix(vec![rat(1), rat(1)], 2);
        assert_eq!(
            outer.compose(&RS::expm1(2)).unwrap(),
            rs(&[rat(1), rat(1), frac(1, 2)])
        );
        let s = rs(&[rat(0), rat(3), frac(-2, 7), rat(5)]);
        assert_eq!(RS::t(3).compose(&s).unwrap(), s);
        assert_eq!(
            outer.compose(&RS::exp(2)),
            Err(Error::NonzeroInnerConstant)
        );
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(
            RS::binomial_power(&rat(2), 3),
            rs(&[rat(1), rat(2), rat(1), rat(0)])
        );
        assert_eq!(
            RS::binomial_power(&frac(1, 2), 2),
            rs(&[rat(1), frac(1, 2), frac(-1, 8)])
        );
        assert_eq!(RS::binomial_power(&rat(0), 4), RS::one(4));
    }

    #[test]
    fn binomial_power_is_exp_of_scaled_log() {
        for alpha in [rat(3), frac(-5, 3), frac(1, 2), rat(-2)] {
            let via_exp = RS::exp(10)
                .compose(&RS::log1p(10).scale(&alpha))
                .unwrap();
            assert_eq!(RS::binomial_power(&alpha, 10), via_exp);
        }
    }

    #[test]
    fn coefficient_extraction() {
        // 1/(1 + q(1 + t)) = 1/((1+q) + q t)
        let s = FormalSeries::new(vec![qrf(&[1, 1], &[1]), QRatFunc::q()])
            .inverse()
            .unwrap();
        assert_eq!(s.extract_coefficient(0, true).unwrap(), qrf(&[1], &[1, 1]));
        assert_eq!(
            s.extract_coefficient(1, true).unwrap(),
            qrf(&[0, -1], &[1, 2, 1])
        );
        assert_eq!(
            s.extract_coefficient(2, true),
            Err(Error::IndexBeyondOrder { index: 2, order: 1 })
        );
        let e = RS::exp(4);
        assert_eq!(e.extract_coefficient(4, false).unwrap(), frac(1, 24));
        assert_eq!(e.extract_coefficient(4, true).unwrap(), rat(1));
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-5i64..=5, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    fn invertible_series() -> impl Strategy<Value = RS> {
        (0usize..=12)
            .prop_flat_map(|order| {
                (
                    small_rational().prop_filter("unit", |c| !Ring::is_zero(c)),
                    prop::collection::vec(small_rational(), order),
                )
            })
            .prop_map(|(c0, rest)| {
                let mut v = vec![c0];
                v.extend(rest);
                RS::new(v)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn inverse_is_multiplicative_inverse(a in invertible_series()) {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv), RS::one(a.order()));
        }

        #[test]
        fn binomial_vandermonde(alpha in small_rational(), beta in small_rational()) {
            let lhs = RS::binomial_power(&alpha, 12).mul(&RS::binomial_power(&beta, 12));
            prop_assert_eq!(lhs, RS::binomial_power(&(&alpha + &beta), 12));
        }

        #[test]
        fn truncation_is_sound(a in invertible_series(), b in invertible_series(), cut in 0usize..=12) {
            let low_a = a.truncate(cut);
            let low_b = b.truncate(cut);
            let order = cut.min(a.order()).min(b.order());
            prop_assert_eq!(a.mul(&b).truncate(order), low_a.mul(&low_b).truncate(order));
            prop_assert_eq!(a.inverse().unwrap().truncate(cut), low_a.inverse().unwrap());
            let mut inner = b.clone();
            inner.coeffs[0] = BigRational::from_integer(0.into());
            let inner_low = inner.truncate(cut);
            prop_assert_eq!(
                a.compose(&inner).unwrap().truncate(order),
                low_a.compose(&inner_low).unwrap().truncate(order)
            );
        }
    }

    #[test]
    fn log_exp_round_trip_order_12() {
        assert_eq!(RS::log1p(12).compose(&RS::expm1(12)).unwrap(), RS::t(12));
        assert_eq!(RS::expm1(12).compose(&RS::log1p(12)).unwrap(), RS::t(12));
    }
}
