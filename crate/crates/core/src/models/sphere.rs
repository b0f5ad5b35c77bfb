//! Spheres in stereographic coordinates and the structures they inherit from
//! an ambient complex or octonionic cross-product structure.

use super::octonion::cross;
use super::ModelEntry;
use crate::error::{GeometryError, Result};
use crate::kernel::{ChartManifold, Jet};
use crate::structure::{Hypothesis, Profile, StructureFields, WeakStructure};

/// Half-width of the sampling box. Beyond it the conformal factor is small
/// enough that coordinate-unit test vectors become short in `g`.
const CHART_HALF_WIDTH: f64 = 1.0;

/// Distance margin from the projection pole.
const POLE_MARGIN: f64 = 1e-2;

/// Inverse stereographic projection `R^d → S^d ⊂ R^{d+1}` from the north
/// pole, with its coordinate partials: returns `(σ, ∂_j σ)` where
/// `dsigma[j][a] = ∂_j σ_a`.
pub fn inverse_stereographic(y: &[Jet]) -> (Vec<Jet>, Vec<Vec<Jet>>) {
    let d = y.len();
    let s = Jet::sum(y.iter().map(|&v| v * v));
    let inv = (s + 1.0).recip();
    let inv2 = inv * inv;
    let mut sigma: Vec<Jet> = y.iter().map(|&v| v * inv * 2.0).collect();
    sigma.push((s - 1.0) * inv);
    let dsigma = (0..d)
        .map(|j| {
            let mut row: Vec<Jet> = (0..d)
                .map(|k| {
                    let diag = if k == j { inv * 2.0 } else { Jet::zero() };
                    diag - y[k] * y[j] * inv2 * 4.0
                })
                .collect();
            row.push(y[j] * inv2 * 4.0);
            row
        })
        .collect();
    (sigma, dsigma)
}

fn pole_domain(y: &[f64]) -> bool {
    // distance-like quantity 1 − σ_last = 2/(1+|y|²)
    let s: f64 = y.iter().map(|v| v * v).sum();
    2.0 / (1.0 + s) >= POLE_MARGIN
}

/// Pulls ambient tangent vectors back to chart components: `g⁻¹ dFᵀ w` for a
/// conformal metric `g = c δ`.
fn pullback(df: &[Vec<Jet>], c_inv: Jet, w: &[Jet]) -> Vec<Jet> {
    df.iter().map(|row| Jet::dot(row, w) * c_inv).collect()
}

fn identity(d: usize) -> Vec<Vec<Jet>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { Jet::constant(1.0) } else { Jet::zero() }).collect())
        .collect()
}

fn conformal_metric(d: usize, factor: f64) -> impl Fn(&[Jet]) -> Vec<Vec<Jet>> + Send + Sync {
    move |y: &[Jet]| {
        let s = Jet::sum(y.iter().map(|&v| v * v));
        let c = (s + 1.0).powi(-2) * factor;
        (0..d).map(|i| (0..d).map(|j| if i == j { c } else { Jet::zero() }).collect()).collect()
    }
}

/// Assembles `φ = (J·)^T`, `ξ`, `η = g(ξ, ·)` from an embedding derivative
/// `df` (rows `∂_j F`), a conformal factor, the ambient `ξ` and the ambient
/// operator `J`.
fn induced_fields(
    df: &[Vec<Jet>],
    c: Jet,
    xi_amb: &[Jet],
    j_amb: impl Fn(&[Jet]) -> Vec<Jet>,
) -> StructureFields {
    let d = df.len();
    let c_inv = c.recip();
    let xi = pullback(df, c_inv, xi_amb);
    let eta: Vec<Jet> = df.iter().map(|row| Jet::dot(row, xi_amb)).collect();
    let cols: Vec<Vec<Jet>> = (0..d).map(|j| pullback(df, c_inv, &j_amb(&df[j]))).collect();
    let phi = (0..d).map(|i| (0..d).map(|j| cols[j][i]).collect()).collect();
    StructureFields { phi, q: identity(d), xi, eta }
}

/// The complex structure of `C^{n+1} = R^{2n+2}`: `J e_{2k} = e_{2k+1}`.
fn complex_j(w: &[Jet]) -> Vec<Jet> {
    let mut out = vec![Jet::zero(); w.len()];
    for k in 0..w.len() / 2 {
        out[2 * k + 1] = w[2 * k];
        out[2 * k] = -w[2 * k + 1];
    }
    out
}

/// The round unit sphere `S^{2n+1} ⊂ C^{n+1}` with `ξ = −Jp` and `φX = (JX)^T`.
pub fn build_sasakian_sphere(n: usize) -> Result<ModelEntry> {
    if !(1..=3).contains(&n) {
        return Err(GeometryError::InvalidParameter(format!("sphere model needs n in 1..=3, got {n}")));
    }
    let d = 2 * n + 1;
    let name = format!("sas-s{d}");
    let chart = ChartManifold::new(name.clone(), d, conformal_metric(d, 4.0))
        .with_bounds(vec![(-CHART_HALF_WIDTH, CHART_HALF_WIDTH); d])
        .with_domain(pole_domain);
    let fields = move |y: &[Jet]| {
        let (p, df) = inverse_stereographic(y);
        let s = Jet::sum(y.iter().map(|&v| v * v));
        let c = (s + 1.0).powi(-2) * 4.0;
        let xi_amb: Vec<Jet> = complex_j(&p).into_iter().map(|v| -v).collect();
        induced_fields(&df, c, &xi_amb, complex_j)
    };
    let structure = WeakStructure::new(name, chart, fields).declare(&[
        Hypothesis::H3,
        Hypothesis::Sasakian,
        Hypothesis::WeakContact,
    ]);
    Ok(ModelEntry::new(structure, Profile::SASAKIAN, "round sphere S^(2n+1) with the Hopf Sasakian structure"))
}

/// `S^5` as the small sphere `{x ∈ S^6 : x_7 = −1/√2}` (radius `1/√2`), with
/// the structure induced by the nearly Kähler `J_p X = p × X` of `S^6`:
/// `N` the unit normal in `S^6`, `ξ = −J N`, `φX = (J X)^T`.
///
/// At this height the normal satisfies `∇_X N = X`, which makes the induced
/// structure nearly Sasakian; the equatorial `S^5` would instead be nearly
/// cosymplectic.
pub fn build_nearly_sasakian_s5() -> Result<ModelEntry> {
    let d = 5;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let height = -std::f64::consts::FRAC_1_SQRT_2;
    let name = "nsas-s5".to_string();
    let chart = ChartManifold::new(name.clone(), d, conformal_metric(d, 4.0 * r * r))
        .with_bounds(vec![(-CHART_HALF_WIDTH, CHART_HALF_WIDTH); d])
        .with_domain(pole_domain);
    let fields = move |y: &[Jet]| {
        let (u, du) = inverse_stereographic(y);
        let s = Jet::sum(y.iter().map(|&v| v * v));
        let c = (s + 1.0).powi(-2) * (4.0 * r * r);
        let mut p: Vec<Jet> = u.iter().map(|&v| v * r).collect();
        p.push(Jet::constant(height));
        // Unit normal of the small sphere inside S^6: (e_7 − height·p) / r.
        let mut normal: Vec<Jet> = p.iter().map(|&v| v * (-height / r)).collect();
        normal[6] = normal[6] + 1.0 / r;
        let df: Vec<Vec<Jet>> = du
            .iter()
            .map(|row| {
                let mut w: Vec<Jet> = row.iter().map(|&v| v * r).collect();
                w.push(Jet::zero());
                w
            })
            .collect();
        let xi_amb: Vec<Jet> = cross(&p, &normal).into_iter().map(|v| -v).collect();
        induced_fields(&df, c, &xi_amb, |w| cross(&p, w))
    };
    let structure = WeakStructure::new(name, chart, fields).declare(&[Hypothesis::H3]);
    let profile = Profile { h_zero: false, sasakian: false, nearly_sasakian: true, weak_contact: false };
    Ok(ModelEntry::new(structure, profile, "nearly Sasakian S^5 inside the nearly Kaehler S^6"))
}
