//! The `spectrum` subcommand: `h²` clusters, their constancy across sampled
//! points and totally-geodesic residuals of the induced distributions.

use std::fmt::Write;

use sasaki_core::models::ModelEntry;
use sasaki_core::sampling::rng_for;
use sasaki_core::spectral::{h2_spectrum, spectrum_constancy, totally_geodesic_residual, Distribution};
use sasaki_core::structure::{sample_structure_point, Hypothesis};
use serde::Serialize;

use crate::CliError;

/// Sections drawn per point for the totally-geodesic test.
const SECTION_SAMPLES: usize = 6;

#[derive(Serialize)]
pub struct ClusterRow {
    pub value: f64,
    pub multiplicity: usize,
    pub lambda: Option<f64>,
}

#[derive(Serialize)]
pub struct GeodesicRow {
    pub distribution: String,
    pub rank: Option<usize>,
    pub totally_geodesic: Option<f64>,
    pub integrability: Option<f64>,
    pub note: Option<String>,
}

#[derive(Serialize)]
pub struct SpectrumReport {
    pub model: String,
    pub points: usize,
    pub seed: u64,
    pub nearly_sasakian: bool,
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<ClusterRow>,
    pub zero_multiplicity: usize,
    pub constancy_deviation: f64,
    pub multiplicities_match: bool,
    pub distributions: Vec<GeodesicRow>,
    pub note: Option<String>,
}

fn geodesic_row(model: &ModelEntry, pts: &[Vec<f64>], which: Distribution, label: String, seed: u64) -> GeodesicRow {
    let mut row = GeodesicRow { distribution: label, rank: None, totally_geodesic: Some(0.0), integrability: Some(0.0), note: None };
    for (i, p) in pts.iter().enumerate() {
        match totally_geodesic_residual(model.structure(), p, which, SECTION_SAMPLES, seed.wrapping_add(i as u64)) {
            Ok(r) => {
                row.rank = Some(r.rank);
                row.totally_geodesic = row.totally_geodesic.map(|t| t.max(r.totally_geodesic));
                row.integrability = row.integrability.map(|t| t.max(r.integrability));
            }
            Err(e) => {
                return GeodesicRow { rank: None, totally_geodesic: None, integrability: None, note: Some(e.to_string()), ..row }
            }
        }
    }
    row
}

pub fn report(model: &ModelEntry, points: usize, seed: u64) -> Result<SpectrumReport, CliError> {
    let s = model.structure();
    let pts: Vec<Vec<f64>> = (0..points)
        .map(|i| sample_structure_point(s, &mut rng_for(seed, s.name(), i as u64)).map(|sp| sp.point().to_vec()))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let first = h2_spectrum(s, &pts[0]).map_err(|e| CliError::Runtime(e.to_string()))?;
    let constancy = spectrum_constancy(s, &pts).map_err(|e| CliError::Runtime(e.to_string()))?;
    let nearly_sasakian = model.declares(Hypothesis::H1);
    let clusters: Vec<ClusterRow> = first
        .clusters
        .iter()
        .map(|c| ClusterRow { value: c.value, multiplicity: c.multiplicity, lambda: c.lambda() })
        .collect();
    let zero_multiplicity = first.clusters.iter().filter(|c| c.is_zero()).map(|c| c.multiplicity).sum();

    let mut distributions = Vec::new();
    let note = if nearly_sasakian {
        distributions.push(geodesic_row(model, &pts, Distribution::XiD0, "[xi]+D0".into(), seed));
        for i in 1..=first.nonzero_indices().len() {
            distributions.push(geodesic_row(model, &pts, Distribution::XiDi(i), format!("[xi]+D{i}"), seed));
        }
        if !s.declares(Hypothesis::H3) {
            Some("constancy is only asserted under H3".to_string())
        } else {
            None
        }
    } else {
        Some("not nearly Sasakian: spectral theorems inapplicable".to_string())
    };

    Ok(SpectrumReport {
        model: model.name().to_string(),
        points,
        seed,
        nearly_sasakian,
        eigenvalues: first.eigenvalues.clone(),
        clusters,
        zero_multiplicity,
        constancy_deviation: constancy.max_deviation,
        multiplicities_match: constancy.multiplicities_match,
        distributions,
        note,
    })
}

pub fn text(r: &SpectrumReport) -> String {
    let mut s = format!("model {}  points {}  seed {}\n", r.model, r.points, r.seed);
    s.push_str("clusters of h^2:\n");
    for c in &r.clusters {
        let lambda = c.lambda.map_or("-".to_string(), |l| format!("{l:.6}"));
        let _ = writeln!(s, "  {:>+13.6e}  x{}  lambda {}", c.value, c.multiplicity, lambda);
    }
    let _ = writeln!(s, "zero multiplicity {}", r.zero_multiplicity);
    let _ = writeln!(s, "constancy deviation {:.3e}  multiplicities match {}", r.constancy_deviation, r.multiplicities_match);
    for d in &r.distributions {
        match (d.rank, d.totally_geodesic, d.integrability) {
            (Some(rank), Some(tg), Some(int)) => {
                let _ = writeln!(s, "  {:<8} rank {}  totally geodesic {:.3e}  integrability {:.3e}", d.distribution, rank, tg, int);
            }
            _ => {
                let _ = writeln!(s, "  {:<8} {}", d.distribution, d.note.as_deref().unwrap_or("not evaluated"));
            }
        }
    }
    if let Some(n) = &r.note {
        let _ = writeln!(s, "note: {n}");
    }
    s
}
