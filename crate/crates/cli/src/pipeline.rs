//! The full analysis of one curve, with parallel cell evaluation and
//! re-perturbation of non-generic input.

use rayon::prelude::*;
use tritrop_core::classcomplex::{analyze_classes, candidate_cells, evaluate_candidate, Arrangement3, TritangentLocus};
use tritrop_core::curve33::{build_curve, d4_coeffs, CoeffMatrix, CurveGamma, D4Element};
use tritrop_core::lifting::{report_for_locus, LiftError, LiftingReport, Signature};
use tritrop_core::tangency::Catalog;
use tritrop_core::Rat;

use crate::error::CliError;
use crate::report::ReportJson;

/// Builds the tritangent locus, evaluating candidate cells in parallel.
pub fn build_locus(gamma: &CurveGamma) -> TritangentLocus {
    let arrangement = Arrangement3::new(gamma);
    let cells = candidate_cells(&arrangement)
        .into_par_iter()
        .filter_map(|(k, p)| evaluate_candidate(gamma, k, p))
        .collect();
    TritangentLocus::assemble(gamma, arrangement, cells)
}

/// Adds `k·i·j / 10⁶` to every coefficient.
pub fn perturb(a: &CoeffMatrix, k: u32) -> CoeffMatrix {
    CoeffMatrix::from_fn(|i, j| &a.a[i][j] + &Rat::new((k as i128) * (i * j) as i128, 1_000_000))
}

/// Result of a successful analysis.
#[derive(Debug)]
pub struct Analysis {
    /// Coefficients analyzed.
    pub coeffs: CoeffMatrix,
    /// Perturbation steps applied.
    pub perturbation: u32,
    /// The curve.
    pub gamma: CurveGamma,
    /// Its tritangent locus.
    pub locus: TritangentLocus,
    /// The lifting report.
    pub report: LiftingReport,
    /// Bounded complex of each class, in report order.
    pub bounded: Vec<Vec<usize>>,
}

impl Analysis {
    /// The JSON report.
    pub fn to_json(&self) -> ReportJson {
        ReportJson::build(&self.coeffs, self.perturbation, &self.gamma, &self.locus, &self.report, &self.bounded)
    }
}

fn non_generic(r: &LiftingReport) -> Option<String> {
    r.classes.iter().find_map(|c| match &c.lifting {
        Err(e @ (LiftError::Total { .. } | LiftError::PositiveDimensional(_))) => Some(e.to_string()),
        _ => None,
    })
}

/// Analyzes a curve without perturbation.
pub fn analyze_once(a: &CoeffMatrix) -> Result<Analysis, CliError> {
    let gamma = build_curve(a)?;
    let locus = build_locus(&gamma);
    let report = report_for_locus(&Catalog::builtin(), &gamma, &locus).map_err(|e| CliError::Input(e.to_string()))?;
    let bounded = analyze_classes(&locus)
        .map_err(|e| CliError::Input(e.to_string()))?
        .into_iter()
        .map(|c| c.bounded)
        .collect();
    Ok(Analysis { coeffs: a.clone(), perturbation: 0, gamma, locus, report, bounded })
}

/// Analyzes a curve, retrying with perturbed coefficients while the input is
/// non-generic.
pub fn analyze(a: &CoeffMatrix, retries: u32) -> Result<Analysis, CliError> {
    let mut last = String::new();
    for k in 0..=retries {
        let coeffs = if k == 0 { a.clone() } else { perturb(a, k) };
        let mut out = analyze_once(&coeffs)?;
        match non_generic(&out.report) {
            None => {
                out.perturbation = k;
                return Ok(out);
            }
            Some(e) => last = e,
        }
    }
    Err(CliError::NonGeneric { attempts: retries + 1, last })
}

/// Sorted `(partition, dims)` multiset of a curve.
pub fn signature(a: &CoeffMatrix) -> Result<Signature, CliError> {
    Ok(analyze_once(a)?.report.signature())
}

/// Whether all eight symmetric images of the curve have the same signature.
pub fn d4_invariant(a: &CoeffMatrix, reference: &Signature) -> Result<bool, CliError> {
    let sigs: Result<Vec<Signature>, CliError> =
        D4Element::all().into_par_iter().map(|g| signature(&d4_coeffs(&g, a))).collect();
    Ok(sigs?.iter().all(|s| s == reference))
}
