use clap::{Args, Parser, Subcommand, ValueEnum};
use qboole_core::{BigRational, Family, Path};

use crate::CliError;

/// Largest table the CLI will build.
pub const N_MAX_LIMIT: usize = 64;

#[derive(Parser, Debug, Clone)]
#[command(name = "qboole", version, about = "Exact q-Boole, q-Euler and q-Changhee tables and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Emit one record per index n = 0..=n_max.
    Table(TableArgs),
    /// Run identity verifiers over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    /// q-Euler numbers (x = 0).
    EulerNumber,
    /// q-Euler polynomials.
    Euler,
    /// q-Boole polynomials of the first kind.
    Boole1,
    /// q-Boole polynomials of the second kind.
    Boole2,
    /// q-Changhee polynomials.
    Changhee,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::EulerNumber => Family::QEulerNumber,
            FamilyArg::Euler => Family::QEulerPoly,
            FamilyArg::Boole1 => Family::QBooleFirst,
            FamilyArg::Boole2 => Family::QBooleSecond,
            FamilyArg::Changhee => Family::QChanghee,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathArg {
    Genfunc,
    Recurrence,
    Stirling,
    Reflection,
}

impl From<PathArg> for Path {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Genfunc => Path::GenFunc,
            PathArg::Recurrence => Path::Recurrence,
            PathArg::Stirling => Path::StirlingTransform,
            PathArg::Reflection => Path::Reflection,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n_max: usize,
    /// Order k >= 1.
    #[arg(long = "order", short = 'k', default_value_t = 1)]
    pub order: usize,
    /// Rational "p/q"; required for the Boole families, must be nonzero.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// "sym" or a rational.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub x: String,
    /// "sym" or a rational at which q is evaluated.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Computation route; defaults to the generating function.
    #[arg(long, value_enum)]
    pub path: Option<PathArg>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// "all" or a comma-separated list such as "thm2.1,eq2.35".
    #[arg(long, default_value = "all")]
    pub identity: String,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub order_max: usize,
    /// Comma-separated nonzero rationals.
    #[arg(long, default_value = "1,2,3,-1,-2,1/2", allow_hyphen_values = true)]
    pub lambdas: String,
    /// "sym" for polynomial identities in x, "sampled" for random rational points.
    #[arg(long, default_value = "sym")]
    pub x: String,
    /// Number of sampled x values.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Omit timings so the report is byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
    /// Test hook: "n,m,delta" adds delta to S1(n, m) before verifying.
    #[arg(long, hide = true, allow_hyphen_values = true)]
    pub inject_stirling_fault: Option<String>,
}

pub fn parse_rational(s: &str, what: &str) -> Result<BigRational, CliError> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| CliError::Config(format!("{what}: cannot parse {s:?} as a rational \"p/q\"")))
}

/// `None` for "sym", otherwise the rational value.
pub fn parse_sym_or_rational(s: &str, what: &str) -> Result<Option<BigRational>, CliError> {
    if s.trim().eq_ignore_ascii_case("sym") {
        Ok(None)
    } else {
        parse_rational(s, what).map(Some)
    }
}

pub fn check_n_max(n_max: usize) -> Result<(), CliError> {
    if n_max > N_MAX_LIMIT {
        return Err(CliError::Config(format!(
            "--n-max {n_max} exceeds the limit of {N_MAX_LIMIT}"
        )));
    }
    Ok(())
}
