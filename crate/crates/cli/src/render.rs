//! Text, CSV and JSON rendering of listings and reports.

use std::fmt::Write;

use sasaki_core::identities::{GateReport, IdentityRecord, RowKind, SuiteReport, SuiteRow};
use sasaki_core::models::ModelEntry;
use sasaki_core::structure::Profile;
use serde::Serialize;

use crate::CliError;

/// Column order shared by CSV output and the JSON row objects.
pub const CSV_COLUMNS: [&str; 10] = [
    "model",
    "identity",
    "hypothesis",
    "applicable",
    "hypothesis_ok",
    "n",
    "max_residual",
    "mean_residual",
    "pass",
    "note",
];

/// Sort key that compares digit runs numerically, so `PC-2` precedes `PC-10`.
pub fn natural_key(s: &str) -> Vec<(u64, String)> {
    let mut key = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if digits > 0 {
            key.push((rest[..digits].parse().unwrap_or(u64::MAX), String::new()));
            rest = &rest[digits..];
        } else {
            let text = rest.find(|c: char| c.is_ascii_digit()).unwrap_or(rest.len());
            key.push((0, rest[..text].to_string()));
            rest = &rest[text..];
        }
    }
    key
}

pub fn profile_label(p: Profile) -> &'static str {
    if p.sasakian {
        "Sasakian"
    } else if p.nearly_sasakian {
        "nearly Sasakian (non-Sasakian)"
    } else if p.weak_contact {
        "weak contact metric"
    } else {
        "weak almost contact metric"
    }
}

fn kind_label(k: RowKind) -> &'static str {
    match k {
        RowKind::Structure => "structure",
        RowKind::Statement => "statement",
        RowKind::ProofChain => "proof-chain",
    }
}

pub fn list_json(models: &[ModelEntry], ids: &[&IdentityRecord]) -> String {
    #[derive(Serialize)]
    struct Model<'a> {
        name: &'a str,
        dim: usize,
        profile: &'static str,
        declared: Vec<&'static str>,
        description: &'static str,
    }
    #[derive(Serialize)]
    struct Identity {
        id: &'static str,
        hypothesis: &'static str,
        kind: &'static str,
        arity: usize,
        anchor: &'static str,
        erratum: Option<&'static str>,
    }
    #[derive(Serialize)]
    struct Listing<'a> {
        models: Vec<Model<'a>>,
        identities: Vec<Identity>,
    }
    let listing = Listing {
        models: models
            .iter()
            .map(|m| Model {
                name: m.name(),
                dim: m.dim(),
                profile: profile_label(m.profile()),
                declared: m.summary().declared,
                description: m.description(),
            })
            .collect(),
        identities: ids
            .iter()
            .map(|r| Identity {
                id: r.id,
                hypothesis: r.hypothesis.label(),
                kind: kind_label(r.kind),
                arity: r.arity,
                anchor: r.anchor,
                erratum: r.erratum,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&listing).expect("listing serializes") + "\n"
}

pub fn list_text(models: &[ModelEntry], ids: &[&IdentityRecord]) -> String {
    let mut s = String::from("MODELS\n");
    for m in models {
        let declared = m.summary().declared.join(",");
        let _ = writeln!(s, "  {:<14} dim {}  {:<32} [{}]", m.name(), m.dim(), profile_label(m.profile()), declared);
        let _ = writeln!(s, "  {:<14} {}", "", m.description());
    }
    s.push_str("\nIDENTITIES\n");
    for r in ids {
        let _ = writeln!(s, "  {:<9} {:<5} {:<12} {}", r.id, r.hypothesis.label(), kind_label(r.kind), r.anchor);
        if let Some(e) = r.erratum {
            let _ = writeln!(s, "  {:<9} {:<5} {:<12} read as: {}", "", "", "", e);
        }
    }
    s
}

fn residual_text(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

pub fn report_csv(report: &SuiteReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Runtime(format!("csv: {e}"));
    w.write_record(CSV_COLUMNS).map_err(err)?;
    for r in &report.rows {
        w.write_record([
            r.model.clone(),
            r.identity.to_string(),
            r.hypothesis.label().to_string(),
            r.applicable.to_string(),
            r.hypothesis_ok.to_string(),
            r.n.to_string(),
            residual_text(r.max_residual),
            residual_text(r.mean_residual),
            r.pass.to_string(),
            r.note.clone(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Runtime(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn status(r: &SuiteRow) -> &'static str {
    if !r.applicable {
        "info"
    } else if r.is_failure() {
        "FAIL"
    } else {
        "ok"
    }
}

pub fn report_text(report: &SuiteReport) -> String {
    let c = &report.config;
    let mut s = format!("seed {}  tol {:e}  points {}  tuples {}\n\n", c.seed, c.tol, c.points, c.tuples);
    let _ = writeln!(s, "{:<14} {:<9} {:<5} {:<6} {:>5} {:>11} {:>11}  note", "model", "identity", "hyp", "status", "n", "max", "mean");
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{:<14} {:<9} {:<5} {:<6} {:>5} {:>11.3e} {:>11.3e}  {}",
            r.model,
            r.identity,
            r.hypothesis.label(),
            status(r),
            r.n,
            r.max_residual,
            r.mean_residual,
            r.note
        );
    }
    let failures = report.failures_by_residual();
    let _ = writeln!(s, "\n{} rows, {} failing", report.rows.len(), failures.len());
    for r in failures {
        let _ = writeln!(s, "  {} {} {:.3e}", r.model, r.identity, r.max_residual);
    }
    s
}

pub fn gates_text(reports: &[GateReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
        let _ = writeln!(s, "{:<5} {:<14} {:<12} {}", r.gate, r.model, verdict.as_str().unwrap_or("?"), r.reason);
        for (name, value) in &r.checks {
            let _ = writeln!(s, "{:<33} {:<22} {:.3e}", "", name, value);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        let mut ids = vec!["PC-10", "PC-2", "PC-FIN", "AX-1", "PC-1", "L1-b", "L1-a"];
        ids.sort_by_cached_key(|s| natural_key(s));
        assert_eq!(ids, ["AX-1", "L1-a", "L1-b", "PC-1", "PC-2", "PC-10", "PC-FIN"]);
    }
}
