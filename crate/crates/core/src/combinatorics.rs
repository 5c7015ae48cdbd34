//! Stirling numbers, generalized binomial and multinomial coefficients, and
//! the conversion between the power basis and the falling-factorial basis.
//!
//! **Sign convention.** `S1` is the *signed* Stirling number of the first
//! kind, defined by `(log(1 + t))^m = m! * sum_{l >= m} S1(l, m) t^l / l!`.
//! Hence `S1(2, 1) = -1` and `(x)_n = sum_l S1(n, l) x^l`. Many references
//! tabulate the unsigned `|S1|` instead.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{prints_as_atom, write_terms, Poly, QRatFunc};
use crate::powerseries::factorial;
use crate::ring::{rat, Ring};

/// Polynomial in `x` with coefficients in Q(q).
pub type XPoly = Poly<QRatFunc>;

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs(), "x", prints_as_atom)
    }
}

/// Triangles `S1(n, m)` and `S2(n, m)` for `0 <= m <= n <= n_max`, built once
/// by recurrence and immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    n_max: usize,
    s1: Vec<Vec<BigInt>>,
    s2: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut s1: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        let mut s2: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 0..n_max {
            let nb = BigInt::from(n);
            let row = |prev: &Vec<BigInt>, weight: &dyn Fn(usize) -> BigInt| -> Vec<BigInt> {
                (0..=n + 1)
                    .map(|m| {
                        let left = if m >= 1 { prev[m - 1].clone() } else { BigInt::zero() };
                        let stay = prev.get(m).map_or_else(BigInt::zero, |v| v * weight(m));
                        left + stay
                    })
                    .collect()
            };
            // S1(n+1, m) = S1(n, m-1) - n S1(n, m)
            let next1 = row(&s1[n], &|_| -nb.clone());
            // S2(n+1, m) = S2(n, m-1) + m S2(n, m)
            let next2 = row(&s2[n], &|m| BigInt::from(m));
            s1.push(next1);
            s2.push(next2);
        }
        StirlingTable { n_max, s1, s2 }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize, m: usize) -> Result<()> {
        if m > n || n > self.n_max {
            return Err(Error::StirlingIndex {
                n,
                m,
                n_max: self.n_max,
            });
        }
        Ok(())
    }

    /// Signed Stirling number of the first kind.
    pub fn stirling1(&self, n: usize, m: usize) -> Result<BigInt> {
        self.check(n, m)?;
        Ok(self.s1[n][m].clone())
    }

    pub fn stirling2(&self, n: usize, m: usize) -> Result<BigInt> {
        self.check(n, m)?;
        Ok(self.s2[n][m].clone())
    }

    /// Row `n` of the first-kind triangle, `S1(n, 0..=n)`.
    pub fn s1_row(&self, n: usize) -> Result<&[BigInt]> {
        self.check(n, 0)?;
        Ok(&self.s1[n])
    }

    pub fn s2_row(&self, n: usize) -> Result<&[BigInt]> {
        self.check(n, 0)?;
        Ok(&self.s2[n])
    }

    /// Fault injection for exercising verifiers: adds `delta` to `S1(n, m)`.
    #[doc(hidden)]
    pub fn with_s1_perturbed(mut self, n: usize, m: usize, delta: i64) -> Result<Self> {
        self.check(n, m)?;
        self.s1[n][m] += delta;
        Ok(self)
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `C(alpha, n) = alpha (alpha - 1) ... (alpha - n + 1) / n!` over any ring.
pub fn binomial_in<R: Ring>(alpha: &R, n: usize) -> R {
    let mut acc = R::one();
    for j in 0..n {
        acc = acc.mul_ref(&alpha.sub_ref(&R::from_int(j as i64)));
    }
    acc.scale_rational(&BigRational::new(BigInt::one(), factorial(n)))
}

pub fn gen_binomial(alpha: &BigRational, n: usize) -> BigRational {
    binomial_in(alpha, n)
}

/// `n! / (l_1! ... l_k!)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsMismatch { n, sum });
    }
    Ok(parts
        .iter()
        .fold(factorial(n), |acc, &l| acc / factorial(l)))
}

/// `(x)_n = x (x - 1) ... (x - n + 1)` expanded by direct multiplication.
pub fn falling_factorial(n: usize) -> XPoly {
    (0..n).fold(XPoly::one(), |acc, j| {
        &acc * &XPoly::new(vec![QRatFunc::constant(rat(-(j as i64))), QRatFunc::one()])
    })
}

/// `(x)_n = sum_l S1(n, l) x^l`, read off the Stirling table.
pub fn falling_factorial_as_powers(table: &StirlingTable, n: usize) -> Result<XPoly> {
    Ok(XPoly::new(
        table
            .s1_row(n)?
            .iter()
            .map(|s| QRatFunc::constant(BigRational::from_integer(s.clone())))
            .collect(),
    ))
}

/// Coefficients `c_m` with `x^n = sum_m c_m (x)_m`; these are `S2(n, m)`.
pub fn powers_as_falling_factorial(table: &StirlingTable, n: usize) -> Result<Vec<BigRational>> {
    Ok(table
        .s2_row(n)?
        .iter()
        .map(|s| BigRational::from_integer(s.clone()))
        .collect())
}

/// Rewrites a falling-factorial expansion `sum_m c_m (x)_m` in the power basis.
pub fn falling_to_powers(table: &StirlingTable, coeffs: &[BigRational]) -> Result<XPoly> {
    let mut acc = XPoly::zero();
    for (m, c) in coeffs.iter().enumerate() {
        let ff = falling_factorial_as_powers(table, m)?;
        acc = &acc + &ff.scale(&QRatFunc::constant(c.clone()));
    }
    Ok(acc)
}
