//! Library backing the `fiberlab` binary: run configuration, report
//! assembly, and deterministic rendering. Kept as a library so integration
//! tests can run commands in-process.

mod commands;
mod render;
mod report;

pub use commands::{locus_table, run, CommandKind};
pub use report::{CheckRecord, Report};
pub use render::{render, render_tables, TableRow, TableSection};

use std::path::PathBuf;

use fiberlab_core::exactmath::Scalar;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

/// Everything that determines a run. The seed and sample set fully
/// determine every numeric output.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: Option<PathBuf>,
    /// Corpus mode: run over every `.hopf` file in the directory.
    pub corpus: Option<PathBuf>,
    pub seed: u64,
    /// Override for the evaluation points of primitive central symbols.
    pub samples: Option<Vec<Scalar>>,
    pub format: OutputFormat,
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    /// Tolerance for the Perron fallback of the Frobenius-Perron dimension.
    pub perron_tol: Option<f64>,
    /// Sample count for Cayley-Hamilton verification.
    pub ch_samples: usize,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            input: None,
            corpus: None,
            seed: 0,
            samples: None,
            format: OutputFormat::Json,
            k_min: None,
            k_max: None,
            perron_tol: None,
            ch_samples: 100,
        }
    }
}

/// Failure modes mapped to process exit codes: internal errors exit 1,
/// input validation failures exit 2, unsupported inputs exit 3.
#[derive(Debug)]
pub enum CliError {
    Internal(String),
    Validation(String),
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Internal(m) | CliError::Validation(m) | CliError::Unsupported(m) => m,
        }
    }
}

pub(crate) fn classify_presentation_error(
    e: fiberlab_core::presentation::PresentationError,
) -> CliError {
    use fiberlab_core::presentation::PresentationError as P;
    match e {
        P::UnsupportedCentralShape { .. } => CliError::Unsupported(e.to_string()),
        P::StepCapExceeded => CliError::Validation(e.to_string()),
        _ => CliError::Validation(e.to_string()),
    }
}

pub(crate) fn classify_cayley_error(e: fiberlab_core::cayley::CayleyError) -> CliError {
    use fiberlab_core::cayley::CayleyError as C;
    match e {
        C::UnsupportedCentralShape { .. } => CliError::Unsupported(e.to_string()),
        C::Presentation(p) => classify_presentation_error(p),
        C::Internal(m) => CliError::Internal(m),
        other => CliError::Internal(other.to_string()),
    }
}

/// Parse a scalar literal: integer, `p/q`, or `zeta(N,k)`.
pub fn parse_scalar(text: &str) -> Result<Scalar, String> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("zeta(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 2 {
            return Err(format!("bad root-of-unity literal {t}"));
        }
        let n: u64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| format!("bad order in {t}"))?;
        let k: i64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| format!("bad exponent in {t}"))?;
        if n == 0 {
            return Err("root-of-unity order must be positive".into());
        }
        return Ok(fiberlab_core::exactmath::root_of_unity(n, k));
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("bad numerator in {t}"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad denominator in {t}"))?;
        if q == 0 {
            return Err("denominator must be nonzero".into());
        }
        return Ok(Scalar::from_fraction(p, q));
    }
    let v: i64 = t.parse().map_err(|_| format!("bad scalar literal {t}"))?;
    Ok(Scalar::from_int(v))
}
