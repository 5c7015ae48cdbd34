//! JSON encoding of exact values. Every number is a base-10 string: integers
//! as `"a"`, other rationals as `"a/b"`. Coefficient arrays ascend in degree.

use qboole_core::{BigRational, Poly, QPoly, QRatFunc, Ring, Value, XPoly};
use serde::{Deserialize, Serialize};

use crate::args::parse_rational;
use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

/// A coefficient of `x`: an element of Q(q), or a rational once q is fixed.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum CoeffJson {
    Fraction(String),
    RatFunc(RatFuncJson),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum ValueJson {
    /// Numeric `x`, numeric `q`.
    Fraction(String),
    /// Numeric `x`, symbolic `q`.
    RatFunc(RatFuncJson),
    /// Symbolic `x`: `(degree, coefficient)` pairs for the nonzero terms, ascending.
    Poly(Vec<(usize, CoeffJson)>),
}

/// One row of `qboole table`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TableRecord {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub lambda: Option<String>,
    pub x: String,
    pub q: String,
    pub value: ValueJson,
}

fn poly_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn encode_ratfunc(v: &QRatFunc) -> RatFuncJson {
    RatFuncJson {
        num: poly_strings(v.numerator()),
        den: poly_strings(v.denominator()),
    }
}

fn encode_coeff(c: &QRatFunc, q: Option<&BigRational>) -> Result<CoeffJson, CliError> {
    Ok(match q {
        None => CoeffJson::RatFunc(encode_ratfunc(c)),
        Some(q0) => CoeffJson::Fraction(c.eval_at_q(q0)?.to_string()),
    })
}

pub fn encode_xpoly(p: &XPoly, q: Option<&BigRational>) -> Result<Vec<(usize, CoeffJson)>, CliError> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| Ok((d, encode_coeff(c, q)?)))
        .collect()
}

/// Encodes a family value; `q = Some(q0)` evaluates every coefficient at `q0`.
pub fn encode_value(v: &Value, q: Option<&BigRational>) -> Result<ValueJson, CliError> {
    Ok(match (v, q) {
        (Value::Scalar(c), None) => ValueJson::RatFunc(encode_ratfunc(c)),
        (Value::Scalar(c), Some(q0)) => ValueJson::Fraction(c.eval_at_q(q0)?.to_string()),
        (Value::Symbolic(p), q) => ValueJson::Poly(encode_xpoly(p, q)?),
    })
}

/// A decoded value, re-canonicalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Exact(Value),
    Rational(BigRational),
    /// Polynomial in `x` over Q.
    RationalPoly(Poly<BigRational>),
}

fn decode_poly(coeffs: &[String]) -> Result<QPoly, CliError> {
    Ok(QPoly::new(
        coeffs
            .iter()
            .map(|s| parse_rational(s, "coefficient"))
            .collect::<Result<_, _>>()?,
    ))
}

pub fn decode_ratfunc(r: &RatFuncJson) -> Result<QRatFunc, CliError> {
    Ok(QRatFunc::new(decode_poly(&r.num)?, decode_poly(&r.den)?)?)
}

pub fn decode_value(v: &ValueJson) -> Result<Decoded, CliError> {
    Ok(match v {
        ValueJson::Fraction(s) => Decoded::Rational(parse_rational(s, "value")?),
        ValueJson::RatFunc(r) => Decoded::Exact(Value::Scalar(decode_ratfunc(r)?)),
        ValueJson::Poly(terms) => {
            let degree = terms.iter().map(|(d, _)| *d + 1).max().unwrap_or(0);
            let exact = terms.iter().all(|(_, c)| matches!(c, CoeffJson::RatFunc(_)));
            if exact || terms.is_empty() {
                let mut coeffs = vec![QRatFunc::zero(); degree];
                for (d, c) in terms {
                    if let CoeffJson::RatFunc(r) = c {
                        coeffs[*d] = decode_ratfunc(r)?;
                    }
                }
                Decoded::Exact(Value::Symbolic(XPoly::new(coeffs)))
            } else {
                let mut coeffs = vec![<BigRational as Ring>::zero(); degree];
                for (d, c) in terms {
                    match c {
                        CoeffJson::Fraction(s) => coeffs[*d] = parse_rational(s, "coefficient")?,
                        CoeffJson::RatFunc(_) => {
                            return Err(CliError::Config("mixed coefficient kinds".into()))
                        }
                    }
                }
                Decoded::RationalPoly(Poly::new(coeffs))
            }
        }
    })
}
