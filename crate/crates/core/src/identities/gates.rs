//! Checks of theorem conclusions, run only where their hypotheses are
//! verified by sampling.

use nalgebra::DMatrix;
use serde::Serialize;

use super::suite::{sample_points, verify_on};
use super::{identity, run_suite, wedge_injectivity, RunConfig};
use crate::error::SuiteError;
use crate::models::ModelEntry;
use crate::structure::{Hypothesis, StructurePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GateVerdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct GateReport {
    pub gate: &'static str,
    pub model: String,
    pub verdict: GateVerdict,
    pub reason: String,
    /// Named conclusion residuals (maxima over the sampled points).
    pub checks: Vec<(String, f64)>,
}

fn inapplicable(gate: &'static str, model: &ModelEntry, reason: String) -> GateReport {
    GateReport { gate, model: model.name().to_string(), verdict: GateVerdict::Inapplicable, reason, checks: vec![] }
}

fn matrix_max(points: &[StructurePoint], f: impl Fn(&StructurePoint) -> DMatrix<f64>) -> f64 {
    points.iter().map(|sp| f(sp).norm()).fold(0.0, f64::max)
}

/// Verifies `classes` plus extra identities on the sampled points; returns the
/// good points or the reason the hypotheses fail.
fn hypotheses(
    model: &ModelEntry,
    cfg: &RunConfig,
    classes: &[Hypothesis],
) -> Result<Result<Vec<StructurePoint>, String>, SuiteError> {
    cfg.validate()?;
    let s = model.structure();
    let raw = sample_points(s, cfg);
    let verified = verify_on(s, &raw, cfg, classes)?;
    let failed: Vec<&str> = verified.iter().filter(|(_, ok)| !ok).map(|(h, _)| h.label()).collect();
    if !failed.is_empty() {
        return Ok(Err(format!("hypothesis {} fails on sampled points", failed.join("+"))));
    }
    let points: Vec<StructurePoint> = raw.into_iter().filter_map(Result::ok).collect();
    if points.is_empty() {
        return Ok(Err("no point could be evaluated".into()));
    }
    Ok(Ok(points))
}

fn conclude(gate: &'static str, model: &ModelEntry, cfg: &RunConfig, checks: Vec<(String, f64)>) -> GateReport {
    let tol = cfg.tol.max(super::HYPOTHESIS_FLOOR);
    // NaN residuals count as exceeding.
    let bad: Vec<&str> = checks.iter().filter(|(_, r)| r.is_nan() || *r >= tol).map(|(n, _)| n.as_str()).collect();
    let (verdict, reason) = if bad.is_empty() {
        (GateVerdict::Pass, "hypotheses verified; all conclusions hold".to_string())
    } else {
        (GateVerdict::Fail, format!("hypotheses verified but {} exceed tolerance", bad.join(", ")))
    };
    GateReport { gate, model: model.name().to_string(), verdict, reason, checks }
}

/// Residual maxima of catalog rows on one model.
fn row_residuals(model: &ModelEntry, ids: &[&str], cfg: &RunConfig) -> Result<Vec<(String, f64)>, SuiteError> {
    let recs = ids.iter().map(|id| identity(id)).collect::<Result<Vec<_>, _>>()?;
    let report = run_suite(&[model], &recs, cfg)?;
    Ok(report.rows.iter().map(|r| (r.identity.to_string(), r.max_residual)).collect())
}

/// Weak almost contact metric + Sasakian formula + `(∇_X Q̃)Y = 0` on ker η
/// ⟹ `Q = id`, `h = 0`, normal, and `hφ = φh = −Q̃` along the way.
pub fn theorem_t01_gate(model: &ModelEntry, cfg: &RunConfig) -> Result<GateReport, SuiteError> {
    const GATE: &str = "t01";
    let points = match hypotheses(model, cfg, &[Hypothesis::H0, Hypothesis::Sasakian, Hypothesis::H2a])? {
        Ok(p) => p,
        Err(reason) => return Ok(inapplicable(GATE, model, reason)),
    };
    let mut checks = vec![
        ("|Q - id|".to_string(), matrix_max(&points, |sp| sp.qt_matrix().clone())),
        ("|h|".to_string(), matrix_max(&points, |sp| sp.h_matrix().clone())),
        ("|h phi + Q~|".to_string(), matrix_max(&points, |sp| sp.h_matrix() * sp.phi_matrix() + sp.qt_matrix())),
        ("|phi h + Q~|".to_string(), matrix_max(&points, |sp| sp.phi_matrix() * sp.h_matrix() + sp.qt_matrix())),
    ];
    checks.extend(row_residuals(model, &["NORMAL"], cfg)?);
    Ok(conclude(GATE, model, cfg, checks))
}

/// Dimension > 5 and both extra conditions ⟹ `Φ₁ + Ψ₀ = 0`, then `h = 0`,
/// `Q = id` and the Sasakian formula.
pub fn theorem_th45_gate(model: &ModelEntry, cfg: &RunConfig) -> Result<GateReport, SuiteError> {
    const GATE: &str = "th45";
    if model.dim() <= 5 {
        return Ok(inapplicable(GATE, model, format!("dimension {} is not greater than 5", model.dim())));
    }
    let points = match hypotheses(model, cfg, &[Hypothesis::H0, Hypothesis::H3])? {
        Ok(p) => p,
        Err(reason) => return Ok(inapplicable(GATE, model, reason)),
    };
    let kernel = match wedge_injectivity(model.structure(), points[0].point()) {
        Ok(k) => k as f64,
        Err(SuiteError::NotContact) => {
            return Ok(inapplicable(GATE, model, "η is not contact at the sampled point".into()))
        }
        Err(e) => return Err(e),
    };
    let mut checks = vec![
        ("dim ker(dη∧·)".to_string(), kernel),
        ("|phi h + Q~|".to_string(), matrix_max(&points, |sp| sp.phi_matrix() * sp.h_matrix() + sp.qt_matrix())),
        ("|h|".to_string(), matrix_max(&points, |sp| sp.h_matrix().clone())),
        ("|Q - id|".to_string(), matrix_max(&points, |sp| sp.qt_matrix().clone())),
    ];
    checks.extend(row_residuals(model, &["E-nS-Sas", "TF-1", "TF-2", "TF-3", "TF-4"], cfg)?);
    Ok(conclude(GATE, model, cfg, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::registry;

    fn cfg() -> RunConfig {
        RunConfig { points: 6, tuples: 4, seed: 42, tol: 1e-8 }
    }

    #[test]
    fn first_gate_across_the_corpus() {
        for m in registry() {
            let r = theorem_t01_gate(&m, &cfg()).unwrap();
            let expected = if m.name().starts_with("sas-") { GateVerdict::Pass } else { GateVerdict::Inapplicable };
            assert_eq!(r.verdict, expected, "{}: {}", m.name(), r.reason);
        }
    }

    #[test]
    fn second_gate_across_the_corpus() {
        for m in registry() {
            let r = theorem_th45_gate(&m, &cfg()).unwrap();
            let expected = if m.dim() > 5 { GateVerdict::Pass } else { GateVerdict::Inapplicable };
            assert_eq!(r.verdict, expected, "{}: {} {:?}", m.name(), r.reason, r.checks);
        }
    }

    #[test]
    fn inapplicable_reports_say_why() {
        let m = crate::models::model("nsas-s5").unwrap();
        let r = theorem_th45_gate(&m, &cfg()).unwrap();
        assert!(r.reason.contains("dimension 5"));
        let r = theorem_t01_gate(&m, &cfg()).unwrap();
        assert!(r.reason.contains("SAS"), "{}", r.reason);
        assert!(r.checks.is_empty());
    }
}
