//! Inputs shared by the benchmarks.

use qboole_core::{BigRational, FormalSeries, QPoly, QRatFunc};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `(a + b q) / (1 + q)^e`, the typical shape of a family coefficient.
pub fn sample_ratfunc(a: i64, b: i64, e: u32) -> QRatFunc {
    let one_plus_q = QRatFunc::two_q();
    QRatFunc::from_poly(QPoly::new(vec![rat(a, 1), rat(b, 1)]))
        .div(&one_plus_q.powi(e as i32).unwrap())
        .unwrap()
}

/// `1 + q (1 + t)^lambda` truncated at `order`.
pub fn boole_denominator(lambda: &BigRational, order: usize) -> FormalSeries<QRatFunc> {
    let q = QRatFunc::q();
    let p = FormalSeries::<QRatFunc>::binomial_power(lambda, order).map(|c| &q * c);
    FormalSeries::one(order).add(&p)
}
