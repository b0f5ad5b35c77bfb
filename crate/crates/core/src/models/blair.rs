//! The standard Sasakian structure on `R^{2n+1}` and its scaled weak deformations.

use super::ModelEntry;
use crate::error::{GeometryError, Result};
use crate::kernel::jet::MAX_DIM;
use crate::kernel::{ChartManifold, Jet};
use crate::structure::{Hypothesis, Profile, StructureFields, WeakStructure};

fn zeros(d: usize) -> Vec<Vec<Jet>> {
    vec![vec![Jet::zero(); d]; d]
}

fn identity(d: usize) -> Vec<Vec<Jet>> {
    let mut m = zeros(d);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Jet::constant(1.0);
    }
    m
}

/// Coordinates `(x_1..x_n, y_1..y_n, z)` with
/// `η = ½(dz − Σ y_i dx_i)`, `ξ = 2∂_z`, `g = η⊗η + ¼Σ(dx_i² + dy_i²)`,
/// `φ∂_{x_i} = −∂_{y_i}`, `φ∂_{y_i} = ∂_{x_i} + y_i∂_z`, `φ∂_z = 0`.
pub fn build_sasakian_r2n1(n: usize) -> Result<ModelEntry> {
    let d = 2 * n + 1;
    if n < 2 || d > MAX_DIM {
        return Err(GeometryError::InvalidParameter(format!(
            "R^(2n+1) model needs 2 <= n and 2n+1 <= {MAX_DIM}, got n = {n}"
        )));
    }
    let z = 2 * n;
    let metric = move |c: &[Jet]| {
        let mut g = zeros(d);
        for i in 0..n {
            for j in 0..n {
                let delta = if i == j { 0.25 } else { 0.0 };
                g[i][j] = c[n + i] * c[n + j] * 0.25 + delta;
            }
            g[i][z] = c[n + i] * (-0.25);
            g[z][i] = g[i][z];
            g[n + i][n + i] = Jet::constant(0.25);
        }
        g[z][z] = Jet::constant(0.25);
        g
    };
    let fields = move |c: &[Jet]| {
        let mut phi = zeros(d);
        for j in 0..n {
            // column x_j: −∂y_j
            phi[n + j][j] = Jet::constant(-1.0);
            // column y_j: ∂x_j + y_j ∂z
            phi[j][n + j] = Jet::constant(1.0);
            phi[z][n + j] = c[n + j];
        }
        let mut xi = vec![Jet::zero(); d];
        xi[z] = Jet::constant(2.0);
        let mut eta = vec![Jet::zero(); d];
        for i in 0..n {
            eta[i] = c[n + i] * (-0.5);
        }
        eta[z] = Jet::constant(0.5);
        StructureFields { phi, q: identity(d), xi, eta }
    };
    let name = format!("sas-r{d}");
    let chart = ChartManifold::new(name.clone(), d, metric).with_bounds(vec![(-2.0, 2.0); d]);
    let structure = WeakStructure::new(name, chart, fields).declare(&[
        Hypothesis::H3,
        Hypothesis::Sasakian,
        Hypothesis::WeakContact,
    ]);
    Ok(ModelEntry::new(structure, Profile::SASAKIAN, "standard Sasakian structure on R^(2n+1)"))
}

/// `φ_a = aφ`, `Q = a²·id + (1 − a²)ξ⊗η` over a classical (`Q = id`) base;
/// `g`, `ξ`, `η` are unchanged.
pub fn build_weak_deformation(base: &ModelEntry, a: f64) -> Result<ModelEntry> {
    if !(a.is_finite() && a > 0.0) {
        return Err(GeometryError::InvalidParameter(format!(
            "deformation parameter must be positive, got {a}"
        )));
    }
    if a == 1.0 {
        return Ok(base.clone());
    }
    let suffix = base.name().split_once('-').map(|(_, s)| s).unwrap_or(base.name());
    let name = format!("weak-{suffix}-a{a}");
    let a2 = a * a;
    let structure = base
        .structure()
        .clone()
        .with_name(name)
        .map_fields(move |_, mut f| {
            let d = f.xi.len();
            for row in f.phi.iter_mut() {
                for v in row.iter_mut() {
                    *v *= a;
                }
            }
            for i in 0..d {
                for j in 0..d {
                    let id = if i == j { a2 } else { 0.0 };
                    f.q[i][j] = f.xi[i] * f.eta[j] * (1.0 - a2) + id;
                }
            }
            f
        })
        .declare(&[Hypothesis::H0]);
    let profile = Profile { h_zero: false, sasakian: false, nearly_sasakian: false, weak_contact: false };
    Ok(ModelEntry::new(structure, profile, "scaled weak deformation (Q != id)"))
}
