//! The subcommands.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;
use crate::generate::random_coefficients;
use crate::pipeline::{analyze, d4_invariant};
use crate::render::{render_class, render_class_id};
use crate::report::{CoeffFile, ReportJson};

/// Where the input curve comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// A coefficient file.
    Input(PathBuf),
    /// A random seed.
    Seed(u64),
}

/// Options of `analyze`.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    /// The curve.
    pub source: Source,
    /// Perturbation retries for non-generic input.
    pub retries: u32,
    /// Whether to write one picture per class.
    pub render: bool,
    /// Output directory; the report goes to standard output when absent.
    pub out: Option<PathBuf>,
    /// Whether to check invariance under the eight symmetries.
    pub d4: bool,
}

/// Reads a coefficient file.
pub fn read_coefficients(path: &Path) -> Result<CoeffFile, CliError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Runs `analyze` and returns the report with its JSON text.
///
/// The report is returned even when checks fail; the error then carries the
/// names of the failed checks.
pub fn cmd_analyze(cfg: &AnalysisConfig) -> Result<(ReportJson, Result<(), CliError>), CliError> {
    let coeffs = match &cfg.source {
        Source::Input(p) => read_coefficients(p)?.to_matrix()?,
        Source::Seed(s) => random_coefficients(*s),
    };
    let mut analysis = analyze(&coeffs, cfg.retries)?;
    if cfg.d4 {
        let sig = analysis.report.signature();
        analysis.report.flags.d4 = Some(d4_invariant(&analysis.coeffs, &sig)?);
    }
    let report = analysis.to_json();
    let text = serde_json::to_string_pretty(&report)?;
    match &cfg.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join("report.json"), &text)?;
            if cfg.render {
                for c in &report.classes {
                    fs::write(dir.join(format!("class_{:02}.svg", c.id)), render_class(&report, c))?;
                }
            }
        }
        None => println!("{text}"),
    }
    let failures = report.checks.failures();
    let status = if failures.is_empty() { Ok(()) } else { Err(CliError::ChecksFailed(failures)) };
    Ok((report, status))
}

/// Runs `random`: the coefficient file for a seed.
pub fn cmd_random(seed: u64) -> CoeffFile {
    CoeffFile::from_matrix(&random_coefficients(seed))
}

/// Runs `render`: the picture of one class from a saved report.
pub fn cmd_render(report: &Path, class: usize) -> Result<String, CliError> {
    let r: ReportJson = serde_json::from_str(&fs::read_to_string(report)?)?;
    render_class_id(&r, class)
}
