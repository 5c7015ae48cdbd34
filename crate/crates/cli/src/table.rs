use std::io::Write;

use qboole_core::{BigRational, Context, Family, FamilyValue, Path, Ring, Value, XArg};

use crate::args::{check_n_max, parse_rational, parse_sym_or_rational, Format, TableArgs};
use crate::encode::{encode_value, CoeffJson, TableRecord, ValueJson};
use crate::CliError;

/// A validated `table` invocation.
#[derive(Clone, Debug)]
pub struct TableConfig {
    pub family: Family,
    pub n_max: usize,
    pub k: usize,
    pub lambda: Option<BigRational>,
    pub x: XArg,
    pub q: Option<BigRational>,
    pub path: Path,
    pub format: Format,
}

impl TableConfig {
    pub fn from_args(a: &TableArgs) -> Result<Self, CliError> {
        check_n_max(a.n_max)?;
        if a.order == 0 {
            return Err(CliError::Config("--order must be at least 1".into()));
        }
        let family = Family::from(a.family);
        let lambda = match (&a.lambda, family.uses_lambda()) {
            (Some(s), true) => {
                let l = parse_rational(s, "--lambda")?;
                if l.is_zero() {
                    return Err(CliError::Config(format!("--lambda must be nonzero for {family}")));
                }
                Some(l)
            }
            (None, true) => {
                return Err(CliError::Config(format!("--lambda is required for {family}")))
            }
            (_, false) => None,
        };
        if family == Family::QChanghee && a.order != 1 {
            return Err(CliError::Config("changhee is defined for --order 1 only".into()));
        }
        let x = match parse_sym_or_rational(&a.x, "--x")? {
            None => XArg::symbolic(),
            Some(v) => XArg::value(v),
        };
        let q = parse_sym_or_rational(&a.q, "--q")?;
        let path = a.path.map(Path::from).unwrap_or(family.paths()[0]);
        if !family.paths().contains(&path) {
            return Err(CliError::Config(format!(
                "--path {path} is not available for {family}"
            )));
        }
        Ok(TableConfig {
            family,
            n_max: a.n_max,
            k: a.order,
            lambda,
            x,
            q,
            path,
            format: a.format,
        })
    }
}

/// Computes the rows `n = 0..=n_max`.
pub fn compute(cfg: &TableConfig) -> Result<Vec<FamilyValue>, CliError> {
    let mut ctx = Context::new(cfg.n_max);
    (0..=cfg.n_max)
        .map(|n| {
            Ok(ctx.evaluate(cfg.family, n, cfg.k, cfg.lambda.as_ref(), &cfg.x, cfg.path)?)
        })
        .collect()
}

fn q_label(q: Option<&BigRational>) -> String {
    q.map_or_else(|| "sym".to_string(), ToString::to_string)
}

fn x_label(x: &XArg) -> String {
    match x {
        XArg::Value(v) => v.to_string(),
        XArg::Symbolic { .. } => "sym".to_string(),
    }
}

pub fn to_record(v: &FamilyValue, q: Option<&BigRational>) -> Result<TableRecord, CliError> {
    Ok(TableRecord {
        family: v.family.name().to_string(),
        n: v.n,
        k: v.k,
        lambda: v.lambda.as_ref().map(ToString::to_string),
        x: x_label(&v.x),
        q: q_label(q),
        value: encode_value(&v.value, q)?,
    })
}

fn write_csv(records: &[TableRecord], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "n", "k", "lambda", "x", "q", "x_degree", "num", "den"])?;
    for r in records {
        let n = r.n.to_string();
        let k = r.k.to_string();
        let lambda = r.lambda.clone().unwrap_or_default();
        let mut row = |x_degree: String, num: String, den: String| {
            w.write_record([&r.family, &n, &k, &lambda, &r.x, &r.q, &x_degree, &num, &den])
        };
        let split = |c: &CoeffJson| match c {
            CoeffJson::Fraction(f) => (f.clone(), "1".to_string()),
            CoeffJson::RatFunc(rf) => (rf.num.join(";"), rf.den.join(";")),
        };
        match &r.value {
            ValueJson::Fraction(f) => row(String::new(), f.clone(), "1".into())?,
            ValueJson::RatFunc(rf) => row(String::new(), rf.num.join(";"), rf.den.join(";"))?,
            ValueJson::Poly(terms) => {
                for (d, c) in terms {
                    let (num, den) = split(c);
                    row(d.to_string(), num, den)?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn write_pretty(
    values: &[FamilyValue],
    q: Option<&BigRational>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    for v in values {
        let lambda = v
            .lambda
            .as_ref()
            .map(|l| format!(" lambda={l}"))
            .unwrap_or_default();
        let shown = match q {
            None => v.value.to_string(),
            Some(q0) => match &v.value {
                Value::Scalar(c) => c.eval_at_q(q0)?.to_string(),
                Value::Symbolic(p) => {
                    let mut terms = Vec::new();
                    for (d, c) in p.coeffs().iter().enumerate() {
                        let c = c.eval_at_q(q0)?;
                        if !Ring::is_zero(&c) {
                            terms.push(format!("({c})*x^{d}"));
                        }
                    }
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    }
                }
            },
        };
        writeln!(
            out,
            "{} n={} k={}{lambda} x={} q={}: {shown}",
            v.family,
            v.n,
            v.k,
            x_label(&v.x),
            q_label(q)
        )?;
    }
    Ok(())
}

pub fn run_table(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = TableConfig::from_args(args)?;
    let values = compute(&cfg)?;
    let q = cfg.q.as_ref();
    match cfg.format {
        Format::Json => {
            let records = values
                .iter()
                .map(|v| to_record(v, q))
                .collect::<Result<Vec<_>, _>>()?;
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let records = values
                .iter()
                .map(|v| to_record(v, q))
                .collect::<Result<Vec<_>, _>>()?;
            write_csv(&records, out)?;
        }
        Format::Pretty => write_pretty(&values, q, out)?,
    }
    Ok(())
}
