//! Flag parsing and validation. Anything rejected here exits with status 2
//! and names the offending flag.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use univalent_core::catalog::parse_complex;
use univalent_core::criteria::{ZetaGrid, DEFAULT_TOL};
use univalent_core::quadrature::MeshSpec;
use univalent_core::sequences::SequenceKind;
use univalent_core::series::MAX_ORDER;
use univalent_core::{CatalogFunction, Complex64};

#[derive(Debug)]
pub struct ConfigError {
    pub field: &'static str,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: &'static str, message: impl Into<String>) -> Self {
        ConfigError {
            field,
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid --{}: {}", self.field, self.message)
    }
}

#[derive(Parser, Debug)]
#[command(name = "univalent", version, about = "Coefficient sequences, area sums and univalence criteria on the unit disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Taylor coefficients of a catalog function about a center
    Series(SeriesArgs),
    /// φ, Φ or Ψ sequence at a point
    Sequence(SequenceArgs),
    /// One criterion report T_N at a single ζ
    Criterion(CriterionArgs),
    /// Criterion reports over a ζ-grid
    Scan(ScanArgs),
    /// Decay-bound slack table for φ and Φ
    Bounds(BoundsArgs),
    /// Weighted Prawitz area integral
    Area(AreaArgs),
    /// Grunsky norm U_f(z) and the Ψ identity residual
    Grunsky(GrunskyArgs),
    /// Run the acceptance suite
    Selftest(SelftestArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Catalog function, e.g. koebe or exp_scale:k=4
    #[arg(long = "fn")]
    pub function: String,
    /// Expansion center
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub z: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 16)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SequenceArgs {
    #[arg(long = "fn")]
    pub function: String,
    /// phi, Phi or Psi
    #[arg(long, allow_hyphen_values = true)]
    pub kind: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub z: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 10)]
    pub count: usize,
    /// Required for kind Phi
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CriterionArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub zeta: String,
    /// Truncation N
    #[arg(long = "N", allow_hyphen_values = true, default_value_t = 32)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    /// `default` or `r1,r2,...xM` (radii, then M angles)
    #[arg(long, allow_hyphen_values = true, default_value = "default")]
    pub grid: String,
    #[arg(long = "N", allow_hyphen_values = true, default_value_t = 96)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub z: String,
    #[arg(long = "N", allow_hyphen_values = true, default_value_t = 10)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
    pub lambda: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct AreaArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub z: String,
    /// `R,A,grading`
    #[arg(long, allow_hyphen_values = true, default_value = "256,256,2")]
    pub mesh: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct GrunskyArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub z: String,
    /// Ψ terms in the identity check
    #[arg(long = "N", allow_hyphen_values = true, default_value_t = 64)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "256,256,2")]
    pub mesh: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn function(s: &str) -> Result<CatalogFunction, ConfigError> {
    s.parse().map_err(|e| ConfigError::new("fn", format!("{e}")))
}

pub fn point(field: &'static str, s: &str) -> Result<Complex64, ConfigError> {
    let z = parse_complex(s).map_err(|e| ConfigError::new(field, format!("{e}")))?;
    if !(z.norm() < 1.0) {
        return Err(ConfigError::new(field, format!("{s} is not inside the unit disk")));
    }
    Ok(z)
}

pub fn lambda(value: f64) -> Result<f64, ConfigError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ConfigError::new("lambda", format!("must be positive, got {value}")))
    }
}

pub fn truncation(field: &'static str, value: usize, min: usize) -> Result<usize, ConfigError> {
    if value < min || value > MAX_ORDER {
        return Err(ConfigError::new(field, format!("must lie in [{min}, {MAX_ORDER}], got {value}")));
    }
    Ok(value)
}

pub fn tolerance(value: f64) -> Result<f64, ConfigError> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ConfigError::new("tol", format!("must be non-negative, got {value}")))
    }
}

pub fn kind(s: &str) -> Result<SequenceKind, ConfigError> {
    match s {
        "phi" => Ok(SequenceKind::Aharonov),
        "Phi" => Ok(SequenceKind::Phi),
        "Psi" | "psi" => Ok(SequenceKind::Psi),
        _ => Err(ConfigError::new("kind", format!("expected phi, Phi or Psi, got `{s}`"))),
    }
}

pub fn grid(s: &str) -> Result<ZetaGrid, ConfigError> {
    if s == "default" {
        return Ok(ZetaGrid::default());
    }
    let (radii, angles) = s
        .rsplit_once('x')
        .ok_or_else(|| ConfigError::new("grid", format!("expected `default` or `r1,r2,...xM`, got `{s}`")))?;
    let angles: usize = angles
        .trim()
        .parse()
        .map_err(|_| ConfigError::new("grid", format!("bad angle count `{angles}`")))?;
    let radii = radii
        .split(',')
        .map(|r| r.trim().parse::<f64>().map_err(|_| ConfigError::new("grid", format!("bad radius `{r}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    ZetaGrid::new(radii, angles).map_err(|e| ConfigError::new("grid", format!("{e}")))
}

pub fn mesh(s: &str, center: Complex64) -> Result<MeshSpec, ConfigError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [r, a, g] = parts.as_slice() else {
        return Err(ConfigError::new("mesh", format!("expected `R,A,grading`, got `{s}`")));
    };
    let count = |v: &str| v.parse::<usize>().map_err(|_| ConfigError::new("mesh", format!("bad node count `{v}`")));
    let grading = g
        .parse::<f64>()
        .map_err(|_| ConfigError::new("mesh", format!("bad grading `{g}`")))?;
    MeshSpec::new(count(r)?, count(a)?, grading, center).map_err(|e| ConfigError::new("mesh", format!("{e}")))
}
