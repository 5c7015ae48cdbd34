use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::QPoly;
use crate::error::{Error, Result};
use crate::ring::{rat, ring_ops, Ring};

/// An element of Q(q) in canonical form.
///
/// Numerator and denominator are coprime and the denominator is monic, so two
/// equal values always have identical fields and `==` is exact value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRatFunc {
    num: QPoly,
    den: QPoly,
}

impl QRatFunc {
    /// Canonicalizes `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Ok(Self::from_coprime(num, den))
        } else {
            Ok(Self::from_coprime(num.div_exact(&g), den.div_exact(&g)))
        }
    }

    /// Normalizes the denominator to be monic; inputs must already be coprime.
    fn from_coprime(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if Ring::is_one(&lc) {
            QRatFunc { num, den }
        } else {
            let inv = lc.recip();
            QRatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::var())
    }

    /// `[2]_q = 1 + q`.
    pub fn two_q() -> Self {
        Self::q_number(2)
    }

    /// The q-number `[x]_q = (1 - q^x) / (1 - q)` for an integer `x`.
    ///
    /// For `x >= 0` this is `1 + q + ... + q^(x-1)`; for negative `x` it is
    /// `-q^x [-x]_q`.
    pub fn q_number(x: i64) -> Self {
        let m = x.unsigned_abs() as usize;
        let geometric = QPoly::new(vec![rat(1); m]);
        if x >= 0 {
            Self::from_poly(geometric)
        } else {
            Self::from_coprime(-geometric, QPoly::monomial(rat(1), m))
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a rational constant, if it does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, e: i32) -> Result<Self> {
        let p = self.pow_u(e.unsigned_abs());
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Exact evaluation at `q = q0`.
    pub fn eval_at_q(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if Zero::is_zero(&d) {
            return Err(Error::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Ring for QRatFunc {
    fn zero() -> Self {
        QRatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }
    fn one() -> Self {
        QRatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            let g = num.gcd(&self.den);
            return if g.is_one() {
                Self::from_coprime(num, self.den.clone())
            } else {
                Self::from_coprime(num.div_exact(&g), self.den.div_exact(&g))
            };
        }
        // a/b + c/d with g = gcd(b, d): any common factor of the new numerator
        // and denominator divides g.
        let g = self.den.gcd(&rhs.den);
        let b = self.den.div_exact(&g);
        let d = rhs.den.div_exact(&g);
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        let den = &b * &rhs.den;
        let h = num.gcd(&g);
        if h.is_one() {
            Self::from_coprime(num, den)
        } else {
            Self::from_coprime(num.div_exact(&h), den.div_exact(&h))
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        Self::from_coprime(&a * &c, &b * &d)
    }
    fn neg_ref(&self) -> Self {
        QRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(r.clone())
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

ring_ops!(impl[] QRatFunc);

impl From<QPoly> for QRatFunc {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRational> for QRatFunc {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_constant() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.is_constant() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

/// Rational constants print without parentheses inside a polynomial in `x`.
pub(crate) fn prints_as_atom(c: &QRatFunc) -> bool {
    c.is_polynomial() && c.numerator().is_constant()
}
