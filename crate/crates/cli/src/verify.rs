use std::io::Write;

use qboole_core::identities::XMode;
use qboole_core::{
    verify_suite, BigRational, IdentityId, IdentityReport, Ranges, Ring, StirlingTable, Status,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{check_n_max, parse_rational, Format, VerifyArgs};
use crate::encode::{encode_xpoly, CoeffJson};
use crate::{CliError, EXIT_IDENTITY_FAILED, EXIT_OK};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub identities: Vec<IdentityId>,
    pub ranges: Ranges,
    pub seed: u64,
    pub format: Format,
    pub timing: bool,
    /// `(n, m, delta)` added to `S1(n, m)` before verifying.
    pub stirling_fault: Option<(usize, usize, i64)>,
}

pub fn parse_identities(s: &str) -> Result<Vec<IdentityId>, CliError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in s.split(',') {
        let id = IdentityId::from_id(part.trim()).ok_or_else(|| {
            let known: Vec<_> = IdentityId::ALL.iter().map(|i| i.id()).collect();
            CliError::Config(format!(
                "unknown identity {part:?}; expected \"all\" or one of {}",
                known.join(", ")
            ))
        })?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// Rational sample points with numerators in [-20, 20] and denominators in [1, 7].
pub fn sample_points(seed: u64, count: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let num: i64 = rng.gen_range(-20..=20);
            let den: i64 = rng.gen_range(1..=7);
            BigRational::new(num.into(), den.into())
        })
        .collect()
}

impl VerifyConfig {
    pub fn from_args(a: &VerifyArgs) -> Result<Self, CliError> {
        check_n_max(a.n_max)?;
        if a.order_max == 0 {
            return Err(CliError::Config("--order-max must be at least 1".into()));
        }
        let lambdas = a
            .lambdas
            .split(',')
            .map(|s| {
                let l = parse_rational(s, "--lambdas")?;
                if l.is_zero() {
                    Err(CliError::Config("--lambdas entries must be nonzero".into()))
                } else {
                    Ok(l)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let x_mode = match a.x.trim().to_ascii_lowercase().as_str() {
            "sym" => XMode::Symbolic,
            "sampled" => {
                if a.samples == 0 {
                    return Err(CliError::Config("--samples must be at least 1".into()));
                }
                XMode::Sampled(sample_points(a.seed, a.samples))
            }
            other => {
                return Err(CliError::Config(format!(
                    "--x must be \"sym\" or \"sampled\", got {other:?}"
                )))
            }
        };
        let stirling_fault = a
            .inject_stirling_fault
            .as_deref()
            .map(|s| {
                let parts: Vec<&str> = s.split(',').map(str::trim).collect();
                let bad = || CliError::Config(format!("fault spec {s:?} is not \"n,m,delta\""));
                match parts.as_slice() {
                    [n, m, d] => Ok((
                        n.parse().map_err(|_| bad())?,
                        m.parse().map_err(|_| bad())?,
                        d.parse().map_err(|_| bad())?,
                    )),
                    _ => Err(bad()),
                }
            })
            .transpose()?;
        Ok(VerifyConfig {
            identities: parse_identities(&a.identity)?,
            ranges: Ranges {
                n_max: a.n_max,
                k_max: a.order_max,
                lambdas,
                x_mode,
            },
            seed: a.seed,
            format: a.format,
            timing: !a.no_timing,
            stirling_fault,
        })
    }
}

#[derive(Serialize, Debug)]
struct CounterexampleJson {
    params: String,
    lhs: Vec<(usize, CoeffJson)>,
    rhs: Vec<(usize, CoeffJson)>,
}

#[derive(Serialize, Debug)]
struct IdentityJson {
    id: &'static str,
    description: &'static str,
    status: &'static str,
    cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
    counterexample: Option<CounterexampleJson>,
    error: Option<String>,
}

#[derive(Serialize, Debug)]
struct ReportJson {
    status: &'static str,
    n_max: usize,
    order_max: usize,
    lambdas: Vec<String>,
    x: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
    identities: Vec<IdentityJson>,
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn x_mode_label(cfg: &VerifyConfig) -> String {
    match &cfg.ranges.x_mode {
        XMode::Symbolic => "sym".into(),
        XMode::Sampled(points) => {
            let pts: Vec<String> = points.iter().map(ToString::to_string).collect();
            format!("sampled(seed={}; {})", cfg.seed, pts.join(";"))
        }
    }
}

fn identity_json(r: &IdentityReport, timing: bool) -> Result<IdentityJson, CliError> {
    let counterexample = r
        .first_counterexample
        .as_ref()
        .map(|c| {
            Ok::<_, CliError>(CounterexampleJson {
                params: c.params.clone(),
                lhs: encode_xpoly(&c.lhs, None)?,
                rhs: encode_xpoly(&c.rhs, None)?,
            })
        })
        .transpose()?;
    Ok(IdentityJson {
        id: r.identity.id(),
        description: r.identity.description(),
        status: status_str(r.status),
        cases: r.cases,
        elapsed_ms: timing.then_some(r.elapsed.as_millis() as u64),
        counterexample,
        error: r.error.clone(),
    })
}

/// Runs the configured suite; returns the reports in selection order.
pub fn execute(cfg: &VerifyConfig) -> Result<Vec<IdentityReport>, CliError> {
    let table = match cfg.stirling_fault {
        Some((n, m, delta)) => Some(StirlingTable::new(cfg.ranges.n_max).with_s1_perturbed(n, m, delta)?),
        None => None,
    };
    Ok(verify_suite(&cfg.identities, &cfg.ranges, table.as_ref()))
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let cfg = VerifyConfig::from_args(args)?;
    let start = std::time::Instant::now();
    let reports = execute(&cfg)?;
    let all_pass = reports.iter().all(IdentityReport::passed);
    match cfg.format {
        Format::Json | Format::Csv => {
            let report = ReportJson {
                status: if all_pass { "pass" } else { "fail" },
                n_max: cfg.ranges.n_max,
                order_max: cfg.ranges.k_max,
                lambdas: cfg.ranges.lambdas.iter().map(ToString::to_string).collect(),
                x: x_mode_label(&cfg),
                elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis() as u64),
                identities: reports
                    .iter()
                    .map(|r| identity_json(r, cfg.timing))
                    .collect::<Result<_, _>>()?,
            };
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Pretty => {
            for r in &reports {
                if cfg.timing {
                    writeln!(out, "{r}  [{} ms]", r.elapsed.as_millis())?;
                } else {
                    writeln!(out, "{r}")?;
                }
            }
            writeln!(out, "{}", if all_pass { "all identities pass" } else { "FAILED" })?;
        }
    }
    if !all_pass {
        if let Some(r) = reports.iter().find(|r| !r.passed()) {
            eprintln!("identity {} failed", r.identity.id());
        }
        return Ok(EXIT_IDENTITY_FAILED);
    }
    Ok(EXIT_OK)
}
