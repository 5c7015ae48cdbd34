//! The commutative-ring abstraction shared by scalars, polynomials and
//! series coefficients.
//!
//! Every ring used here is a Q-algebra, so the trait carries the embedding
//! of the rationals. Method names carry a `_ref` suffix to stay clear of the
//! `std::ops` operator traits, which the concrete types also implement.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    /// Multiplicative inverse, if `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn from_int(i: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(i)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn scale_rational(&self, r: &BigRational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Forwards `+ - * unary-` on owned values and references to the [`Ring`] methods.
macro_rules! ring_ops {
    (impl[$($gen:tt)*] $t:ty) => {
        impl<$($gen)*> std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::ring::Ring::add_ref(self, rhs)
            }
        }
        impl<$($gen)*> std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::ring::Ring::add_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::ring::Ring::sub_ref(self, rhs)
            }
        }
        impl<$($gen)*> std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::ring::Ring::sub_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::ring::Ring::mul_ref(self, rhs)
            }
        }
        impl<$($gen)*> std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::ring::Ring::mul_ref(&self, &rhs)
            }
        }
        impl<$($gen)*> std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg_ref(self)
            }
        }
        impl<$($gen)*> std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg_ref(&self)
            }
        }
    };
}
pub(crate) use ring_ops;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
