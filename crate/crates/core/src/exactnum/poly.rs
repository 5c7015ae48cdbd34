use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::ring::{rat, ring_ops, Ring};

/// Dense univariate polynomial with coefficients in `R`, lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^degree`
    pub fn monomial(c: R, degree: usize) -> Self {
        if c.is_zero() {
            return Self::new(Vec::new());
        }
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    /// `self(inner)` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul_ref(inner).add_ref(&Self::constant(c.clone()))
        })
    }

    /// `self(c * var)`: the coefficient of `var^i` is multiplied by `c^i`.
    pub fn scale_var(&self, c: &R) -> Self {
        let mut power = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul_ref(&power));
            power = power.mul_ref(c);
        }
        Self::new(out)
    }

    /// `self(var + a)`.
    pub fn shift(&self, a: &R) -> Self {
        self.compose(&Self::new(vec![a.clone(), R::one()]))
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Poly<S>> {
        Ok(Poly::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Euclidean division. The divisor's leading coefficient must be a unit.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = divisor.coeffs[dd]
            .try_inverse()
            .ok_or(Error::NonInvertibleLeading)?;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].mul_ref(&inv_lc);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(d));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self
            .div_rem(divisor)
            .expect("exact division by a nonzero polynomial over a field");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }
}

impl Poly<BigRational> {
    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if Ring::is_one(lc) => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `r` such that this monic polynomial of positive degree is `(q - r)^e`.
    fn linear_power_root(&self) -> Option<BigRational> {
        let e = self.coeffs.len().checked_sub(1).filter(|&e| e > 0)?;
        let root = -&self.coeffs[e - 1] / rat(e as i64);
        let neg_root = -&root;
        let mut expected = rat(1);
        for i in (0..e).rev() {
            expected = expected * &neg_root * rat(i as i64 + 1) / rat((e - i) as i64);
            if expected != self.coeffs[i] {
                return None;
            }
        }
        Some(root)
    }

    /// Multiplicity of `root` as a zero, capped at `cap`.
    fn root_multiplicity(&self, root: &BigRational, cap: usize) -> usize {
        let mut p = self.coeffs.clone();
        let mut m = 0;
        while m < cap && p.len() > 1 {
            // Synthetic division by (q - root).
            let mut quotient = vec![rat(0); p.len() - 1];
            let mut carry = rat(0);
            for i in (0..p.len()).rev() {
                let v = &p[i] + &carry * root;
                if i == 0 {
                    carry = v;
                } else {
                    quotient[i - 1] = v.clone();
                    carry = v;
                }
            }
            if !Zero::is_zero(&carry) {
                break;
            }
            p = quotient;
            m += 1;
        }
        m
    }

    /// Monic greatest common divisor over Q; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        // Denominators are mostly powers of a single linear factor, usually 1 + q.
        for (p, other) in [(&b, &a), (&a, &b)] {
            if let Some(root) = p.linear_power_root() {
                let e = p.coeffs.len() - 1;
                let m = other.root_multiplicity(&root, e);
                return Self::new(vec![-root, rat(1)]).pow_u(m as u32);
            }
        }
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("b is nonzero").1;
            a = b;
            b = r.monic();
        }
        a
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(out)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(R::from_rational(r))
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

ring_ops!(impl[R: Ring] Poly<R>);

/// Shared term printer: `var` names the indeterminate, `atom` decides whether
/// a coefficient prints without parentheses.
pub(crate) fn write_terms<R: Ring + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[R],
    var: &str,
    atom: impl Fn(&R) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let minus_one = R::one().neg_ref();
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = if i > 0 && c.is_one() {
            power
        } else if i > 0 && *c == minus_one {
            format!("-{power}")
        } else {
            let body = if atom(c) { c.to_string() } else { format!("({c})") };
            if i == 0 {
                body
            } else {
                format!("{body}*{power}")
            }
        };
        match (first, term.strip_prefix('-')) {
            (true, _) => write!(f, "{term}")?,
            (false, Some(rest)) => write!(f, " - {rest}")?,
            (false, None) => write!(f, " + {term}")?,
        }
        first = false;
    }
    Ok(())
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "q", |_| true)
    }
}
