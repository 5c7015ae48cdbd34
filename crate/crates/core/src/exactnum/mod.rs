//! Exact scalar and rational-function arithmetic: Q, Q[q] and Q(q).
//!
//! Rationals are `num_rational::BigRational`, which is always stored reduced
//! with a positive denominator. [`QRatFunc`] keeps a canonical form (coprime,
//! monic denominator), so equality of values is structural equality.

mod poly;
mod ratfunc;

pub use num_rational::BigRational;
pub use poly::Poly;
pub(crate) use poly::write_terms;
pub use ratfunc::QRatFunc;
pub(crate) use ratfunc::prints_as_atom;

/// Polynomial in `q` over Q.
pub type QPoly = Poly<BigRational>;
