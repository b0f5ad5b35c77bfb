//! Spectral decomposition of `h²` and the distributions it defines.
//!
//! On a weak nearly Sasakian manifold `h` is skew-adjoint, so `h²` is
//! self-adjoint and non-positive. Its kernel contains `ξ`; the remaining
//! eigenvalues `−λ_i²` split `TM = [ξ] ⊕ D₀ ⊕ D₁ ⊕ … ⊕ D_k`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::sampling::{random_vector, rng_for};
use crate::structure::{StructurePoint, WeakStructure};

/// Eigenvalues closer than this are treated as one cluster.
pub const CLUSTER_TOL: f64 = 1e-6;
/// Clusters closer than this make projector derivatives unreliable.
pub const CROSSING_GAP: f64 = 1e-4;

#[derive(Clone, Debug, Serialize)]
pub struct Cluster {
    /// Eigenvalue of `h²` (cluster mean).
    pub value: f64,
    pub multiplicity: usize,
}

impl Cluster {
    /// `λ ≥ 0` with `value = −λ²`; `None` when the value is positive beyond
    /// the cluster tolerance.
    pub fn lambda(&self) -> Option<f64> {
        if self.value > CLUSTER_TOL {
            None
        } else {
            Some((-self.value).max(0.0).sqrt())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.abs() <= CLUSTER_TOL
    }
}

/// Spectrum of `h²` at one point with `g`-orthogonal spectral projectors.
#[derive(Clone, Debug)]
pub struct H2Spectrum {
    /// All eigenvalues in ascending order, with multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Clusters in ascending order of value.
    pub clusters: Vec<Cluster>,
    /// Projectors onto each cluster's eigenspace, aligned with `clusters`.
    pub projectors: Vec<DMatrix<f64>>,
    /// `ξ ⊗ η`.
    pub p_xi: DMatrix<f64>,
}

impl H2Spectrum {
    fn zero_index(&self) -> Option<usize> {
        self.clusters.iter().position(Cluster::is_zero)
    }

    /// Projector onto `D₀ = ker h² ∩ ker η`.
    pub fn p0(&self) -> DMatrix<f64> {
        match self.zero_index() {
            Some(k) => &self.projectors[k] - &self.p_xi,
            None => DMatrix::zeros(self.p_xi.nrows(), self.p_xi.ncols()),
        }
    }

    /// Indices of the nonzero clusters `D_1 … D_k`.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.clusters.len()).filter(|&k| !self.clusters[k].is_zero()).collect()
    }

    pub fn dim_d0(&self) -> usize {
        self.zero_index().map_or(0, |k| self.clusters[k].multiplicity.saturating_sub(1))
    }

    /// `max ‖(I − P)AP‖` over the cluster projectors, for `A = φ` and `A = h`.
    pub fn invariance_defect(&self, sp: &StructurePoint) -> f64 {
        let d = sp.dim();
        let id = DMatrix::<f64>::identity(d, d);
        let mut worst: f64 = 0.0;
        let mut ps: Vec<DMatrix<f64>> = self.nonzero_indices().iter().map(|&k| self.projectors[k].clone()).collect();
        ps.push(self.p0());
        for p in &ps {
            for a in [sp.phi_matrix(), sp.h_matrix()] {
                let leak = (&id - p) * a * p;
                worst = worst.max(leak.norm() / (1.0 + a.norm()));
            }
        }
        worst
    }
}

/// The spectrum of `h²` at `p`.
pub fn h2_spectrum(s: &WeakStructure, p: &[f64]) -> Result<H2Spectrum> {
    spectrum_of(&s.at(p)?)
}

pub fn spectrum_of(sp: &StructurePoint) -> Result<H2Spectrum> {
    let singular = || GeometryError::SingularMetric { point: sp.point().to_vec() };
    let h2 = sp.h_matrix() * sp.h_matrix();
    let l = sp.metric().clone().cholesky().ok_or_else(singular)?.l();
    let lt = l.transpose();
    let lt_inv = lt.clone().try_inverse().ok_or_else(singular)?;
    let s = &lt * &h2 * &lt_inv;
    let s = (&s + s.transpose()) * 0.5;
    let eig = SymmetricEigen::new(s);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut clusters: Vec<Cluster> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        let v = eig.eigenvalues[i];
        match clusters.last_mut() {
            Some(c) if (v - c.value).abs() <= CLUSTER_TOL => {
                let m = c.multiplicity as f64;
                c.value = (c.value * m + v) / (m + 1.0);
                c.multiplicity += 1;
                members.last_mut().expect("aligned").push(i);
            }
            _ => {
                clusters.push(Cluster { value: v, multiplicity: 1 });
                members.push(vec![i]);
            }
        }
    }
    let projectors = members
        .iter()
        .map(|idx| {
            let mut acc = DMatrix::zeros(sp.dim(), sp.dim());
            for &i in idx {
                let v = eig.eigenvectors.column(i);
                acc += v * v.transpose();
            }
            &lt_inv * acc * &lt
        })
        .collect();
    Ok(H2Spectrum {
        eigenvalues: order.iter().map(|&i| eig.eigenvalues[i]).collect(),
        clusters,
        projectors,
        p_xi: sp.xi_projector(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstancyReport {
    /// Largest deviation of a sorted eigenvalue from its value at the first point.
    pub max_deviation: f64,
    /// Whether every point shows the cluster multiplicities of the first.
    pub multiplicities_match: bool,
    pub multiplicities: Vec<usize>,
    pub eigenvalues: Vec<f64>,
}

/// Compares the spectrum of `h²` across `points`.
pub fn spectrum_constancy(s: &WeakStructure, points: &[Vec<f64>]) -> Result<ConstancyReport> {
    let first = points.first().ok_or_else(|| GeometryError::InvalidParameter("no points".into()))?;
    let reference = h2_spectrum(s, first)?;
    let mults: Vec<usize> = reference.clusters.iter().map(|c| c.multiplicity).collect();
    let mut max_deviation: f64 = 0.0;
    let mut multiplicities_match = true;
    for p in &points[1..] {
        let spec = h2_spectrum(s, p)?;
        for (a, b) in spec.eigenvalues.iter().zip(&reference.eigenvalues) {
            max_deviation = max_deviation.max((a - b).abs());
        }
        let m: Vec<usize> = spec.clusters.iter().map(|c| c.multiplicity).collect();
        multiplicities_match &= m == mults;
    }
    Ok(ConstancyReport { max_deviation, multiplicities_match, multiplicities: mults, eigenvalues: reference.eigenvalues })
}

/// Which distribution to test for total geodesicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// `[ξ] ⊕ D₀`.
    XiD0,
    /// `[ξ] ⊕ D_i`, with `i` counting the nonzero clusters from 1 in
    /// ascending order of eigenvalue.
    XiDi(usize),
    /// `[ξ] ⊕ D₁ ⊕ … ⊕ D_k`.
    XiDbar,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeodesicReport {
    /// `max ‖(I − P)∇_X Y‖ / (1 + ‖X‖‖Y‖)` over sampled sections.
    pub totally_geodesic: f64,
    /// `max ‖(I − P)[X, Y]‖ / (1 + ‖X‖‖Y‖)`.
    pub integrability: f64,
    pub rank: usize,
}

/// Projector and its coordinate partials for a sum of clusters.
fn projector_with_derivatives(
    sp: &StructurePoint,
    spec: &H2Spectrum,
    which: Distribution,
) -> Result<(DMatrix<f64>, Vec<DMatrix<f64>>)> {
    let d = sp.dim();
    let n = spec.clusters.len();
    for w in spec.clusters.windows(2) {
        let gap = w[1].value - w[0].value;
        if gap < CROSSING_GAP {
            return Err(GeometryError::EigenvalueCrossing { point: sp.point().to_vec(), gap });
        }
    }
    // dP_k = Σ_{j≠k} (P_k dA P_j + P_j dA P_k) / (μ_k − μ_j)
    let dproj = |k: usize, m: usize| -> DMatrix<f64> {
        let da = sp.d_h_squared(m);
        let mut out = DMatrix::zeros(d, d);
        for j in (0..n).filter(|&j| j != k) {
            let denom = spec.clusters[k].value - spec.clusters[j].value;
            let (pk, pj) = (&spec.projectors[k], &spec.projectors[j]);
            out += (pk * &da * pj + pj * &da * pk) / denom;
        }
        out
    };
    let zero = spec.zero_index();
    let nonzero = spec.nonzero_indices();
    let picked: Vec<usize> = match which {
        Distribution::XiD0 => zero.into_iter().collect(),
        Distribution::XiDi(i) => {
            let k = *nonzero.get(i.wrapping_sub(1)).ok_or_else(|| {
                GeometryError::InvalidParameter(format!("no eigen-distribution D_{i}; {} nonzero", nonzero.len()))
            })?;
            vec![k]
        }
        Distribution::XiDbar => nonzero.clone(),
    };
    let mut p = DMatrix::zeros(d, d);
    let mut dp: Vec<DMatrix<f64>> = (0..d).map(|_| DMatrix::zeros(d, d)).collect();
    for &k in &picked {
        p += &spec.projectors[k];
        for (m, dpm) in dp.iter_mut().enumerate() {
            *dpm += dproj(k, m);
        }
    }
    // The zero cluster already contains ξ; everything else needs it added.
    if which != Distribution::XiD0 || zero.is_none() {
        p += &spec.p_xi;
        for (m, dpm) in dp.iter_mut().enumerate() {
            *dpm += sp.d_xi_projector(m);
        }
    }
    Ok((p, dp))
}

/// Tests whether a distribution built from the `h²` spectrum is totally
/// geodesic (and integrable) at `p`, using sections `X = P u` for constant `u`.
pub fn totally_geodesic_residual(
    s: &WeakStructure,
    p: &[f64],
    which: Distribution,
    samples: usize,
    seed: u64,
) -> Result<GeodesicReport> {
    let sp = s.at(p)?;
    let spec = spectrum_of(&sp)?;
    let (proj, dproj) = projector_with_derivatives(&sp, &spec, which)?;
    let d = sp.dim();
    let id = DMatrix::<f64>::identity(d, d);
    let rank = proj.trace().round() as usize;
    let gamma = sp.geometry().christoffel();
    let mut rng = rng_for(seed, "totally-geodesic", 0);

    // Directional derivative of the section P u along X: X^k (∂_k P) u.
    let dsec = |x: &DVector<f64>, u: &DVector<f64>| -> DVector<f64> {
        let mut out = DVector::zeros(d);
        for k in 0..d {
            out += &dproj[k] * u * x[k];
        }
        out
    };
    let mut tg: f64 = 0.0;
    let mut integ: f64 = 0.0;
    for _ in 0..samples {
        let u = random_vector(&mut rng, d);
        let w = random_vector(&mut rng, d);
        let x = &proj * &u;
        let y = &proj * &w;
        let mut nabla = dsec(&x, &w);
        for i in 0..d {
            for k in 0..d {
                for j in 0..d {
                    nabla[i] += gamma.gamma(i, k, j) * x[k] * y[j];
                }
            }
        }
        let bracket = dsec(&x, &w) - dsec(&y, &u);
        let scale = 1.0 + sp.norm(&x) * sp.norm(&y);
        tg = tg.max(sp.norm(&((&id - &proj) * nabla)) / scale);
        integ = integ.max(sp.norm(&((&id - &proj) * bracket)) / scale);
    }
    Ok(GeodesicReport { totally_geodesic: tg, integrability: integ, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::jet::Jet;
    use crate::models::{model, ModelEntry};
    use crate::structure::sample_structure_point;

    fn sample(m: &ModelEntry, n: u64) -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| sample_structure_point(m.structure(), &mut rng_for(8, "spectral-test", i)).unwrap().point().to_vec())
            .collect()
    }

    #[test]
    fn nearly_sasakian_sphere_has_two_clusters() {
        let m = model("nsas-s5").unwrap();
        for p in sample(&m, 5) {
            let spec = h2_spectrum(m.structure(), &p).unwrap();
            let shape: Vec<(usize, bool)> = spec.clusters.iter().map(|c| (c.multiplicity, c.is_zero())).collect();
            assert_eq!(shape, [(4, false), (1, true)]);
            assert!((spec.clusters[0].lambda().unwrap() - 1.0).abs() < 1e-9);
            assert_eq!(spec.dim_d0(), 0);
            assert!(spec.eigenvalues.iter().all(|&e| e <= 1e-10));
        }
    }

    #[test]
    fn sasakian_spectrum_is_a_single_zero_cluster() {
        let m = model("sas-r5").unwrap();
        let spec = h2_spectrum(m.structure(), &sample(&m, 1)[0]).unwrap();
        assert_eq!(spec.clusters.len(), 1);
        assert!(spec.clusters[0].is_zero() && spec.clusters[0].multiplicity == 5);
        assert_eq!(spec.dim_d0(), 4);
    }

    #[test]
    fn projectors_resolve_the_identity() {
        for name in ["nsas-s5", "sas-s7", "weak-r5-a1.5"] {
            let m = model(name).unwrap();
            let sp = m.structure().at(&sample(&m, 1)[0]).unwrap();
            let spec = spectrum_of(&sp).unwrap();
            let d = sp.dim();
            let mut sum = spec.p_xi.clone() + spec.p0();
            for &k in &spec.nonzero_indices() {
                sum += &spec.projectors[k];
            }
            assert!((sum - DMatrix::<f64>::identity(d, d)).norm() < 1e-10, "{name}");
            for p in &spec.projectors {
                assert!((p * p - p).norm() < 1e-10, "{name}: idempotent");
                let gp = sp.metric() * p;
                assert!((&gp - gp.transpose()).norm() < 1e-10, "{name}: g-orthogonal");
            }
            assert!(spec.invariance_defect(&sp) < 1e-8, "{name}");
            assert!((sp.qt_matrix() * spec.p0()).norm() < 1e-8);
            let zero_mult = spec.clusters.iter().find(|c| c.is_zero()).unwrap().multiplicity;
            assert_eq!(zero_mult % 2, 1, "{name}");
        }
    }

    #[test]
    fn spectrum_is_constant_on_the_nearly_sasakian_sphere() {
        let m = model("nsas-s5").unwrap();
        let rep = spectrum_constancy(m.structure(), &sample(&m, 30)).unwrap();
        assert!(rep.max_deviation < 1e-7, "{:e}", rep.max_deviation);
        assert!(rep.multiplicities_match);
        assert_eq!(rep.multiplicities, [4, 1]);

        let m = model("sas-s7").unwrap();
        let rep = spectrum_constancy(m.structure(), &sample(&m, 5)).unwrap();
        assert!(rep.max_deviation < 1e-12);
    }

    #[test]
    fn constancy_detects_a_pointwise_rescaling() {
        let m = model("nsas-s5").unwrap();
        let s = m.structure().clone().map_fields(|x, mut f| {
            let scale = Jet::constant(1.0) + x[0] * 0.2;
            for row in &mut f.phi {
                for e in row.iter_mut() {
                    *e = *e * scale;
                }
            }
            f
        });
        let rep = spectrum_constancy(&s, &sample(&m, 10)).unwrap();
        assert!(rep.max_deviation > 1e-3, "{:e}", rep.max_deviation);
    }

    #[test]
    fn constancy_needs_a_point() {
        let m = model("nsas-s5").unwrap();
        assert!(spectrum_constancy(m.structure(), &[]).is_err());
    }

    // Central differences of the spectral projector against the perturbation
    // formula, and against the jet derivative of ξ ⊗ η.
    #[test]
    fn projector_derivatives_match_finite_differences() {
        let m = model("nsas-s5").unwrap();
        let s = m.structure();
        let p = sample(&m, 1).remove(0);
        let sp = s.at(&p).unwrap();
        let spec = spectrum_of(&sp).unwrap();
        let (_, dp) = projector_with_derivatives(&sp, &spec, Distribution::XiD0).unwrap();
        let zero = |q: &[f64]| {
            let spec = h2_spectrum(s, q).unwrap();
            let k = spec.clusters.iter().position(Cluster::is_zero).unwrap();
            spec.projectors[k].clone()
        };
        let eps = 1e-5;
        for m in 0..sp.dim() {
            let (mut a, mut b) = (p.clone(), p.clone());
            a[m] += eps;
            b[m] -= eps;
            let fd = (zero(&a) - zero(&b)) / (2.0 * eps);
            let scale = 1.0 + fd.norm();
            assert!((&dp[m] - &fd).norm() / scale < 1e-6, "slot {m}");
            assert!((sp.d_xi_projector(m) - &fd).norm() / scale < 1e-6, "slot {m}");
        }
    }

    #[test]
    fn distributions_are_totally_geodesic_on_the_nearly_sasakian_sphere() {
        let m = model("nsas-s5").unwrap();
        for p in sample(&m, 4) {
            let r = totally_geodesic_residual(m.structure(), &p, Distribution::XiDi(1), 8, 1).unwrap();
            assert_eq!(r.rank, 5);
            assert!(r.totally_geodesic < 1e-7 && r.integrability < 1e-7);
            // [ξ] alone: ξ is a geodesic field.
            let r = totally_geodesic_residual(m.structure(), &p, Distribution::XiD0, 8, 1).unwrap();
            assert_eq!(r.rank, 1);
            assert!(r.totally_geodesic < 1e-7, "{:e}", r.totally_geodesic);
        }
        let p = sample(&m, 1).remove(0);
        assert!(totally_geodesic_residual(m.structure(), &p, Distribution::XiDi(2), 4, 1).is_err());
    }

    #[test]
    fn whole_tangent_bundle_is_trivially_totally_geodesic() {
        let m = model("sas-r5").unwrap();
        let p = sample(&m, 1).remove(0);
        let r = totally_geodesic_residual(m.structure(), &p, Distribution::XiD0, 8, 1).unwrap();
        assert_eq!(r.rank, 5);
        assert!(r.totally_geodesic < 1e-12 && r.integrability < 1e-12);
    }

    #[test]
    fn near_crossings_are_refused() {
        let m = model("nsas-s5").unwrap();
        let sp = m.structure().at(&sample(&m, 1)[0]).unwrap();
        let mut spec = spectrum_of(&sp).unwrap();
        spec.clusters[0].value = spec.clusters[1].value - 1e-5;
        let err = projector_with_derivatives(&sp, &spec, Distribution::XiD0).unwrap_err();
        assert!(matches!(err, GeometryError::EigenvalueCrossing { .. }));
    }
}
