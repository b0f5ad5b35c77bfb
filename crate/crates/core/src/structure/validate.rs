use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use serde::Serialize;

use super::{rel_scalar, StructurePoint, WeakStructure};
use crate::error::{GeometryError, Result};
use crate::sampling::{random_vector, rng_for};

/// Residual threshold for structure axioms.
pub const AXIOM_TOL: f64 = 1e-8;
/// Lower bound on the eigenvalues of `Q`.
pub const Q_POSITIVITY: f64 = 1e-10;
const MAX_DRAWS: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomEntry {
    pub name: &'static str,
    pub max_residual: f64,
    pub pass: bool,
}

/// Outcome of validating a structure on sampled points.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub points: usize,
    pub entries: Vec<AxiomEntry>,
    /// Points where the structure could not be evaluated at all.
    pub structural_failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.structural_failures.is_empty() && self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, name: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Values of `h`, `Q̃` and `∇ξ` at a point.
#[derive(Clone, Debug)]
pub struct DerivedTensors {
    pub h: DMatrix<f64>,
    pub q_tilde: DMatrix<f64>,
    pub nabla_xi: DMatrix<f64>,
}

/// Smallest eigenvalue of a `g`-self-adjoint operator, after symmetrising
/// with the Cholesky factor of `g`.
pub fn min_eigenvalue(g: &DMatrix<f64>, a: &DMatrix<f64>) -> Result<f64> {
    let s = symmetrized(g, a)?;
    Ok(SymmetricEigen::new(s).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min))
}

/// `Lᵀ A L⁻ᵀ` for `g = L Lᵀ`, symmetrised; similar to `A` when `A` is
/// `g`-self-adjoint.
pub(crate) fn symmetrized(g: &DMatrix<f64>, a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let chol = g.clone().cholesky().ok_or(GeometryError::SingularMetric { point: vec![] })?;
    let l = chol.l();
    let lt_inv = l
        .transpose()
        .try_inverse()
        .ok_or(GeometryError::SingularMetric { point: vec![] })?;
    let s = l.transpose() * a * lt_inv;
    Ok((&s + s.transpose()) * 0.5)
}

/// Draws a point from the structure's chart, redrawing when the metric is
/// numerically singular there.
pub fn sample_structure_point<R: Rng + ?Sized>(s: &WeakStructure, rng: &mut R) -> Result<StructurePoint> {
    let mut last = None;
    for _ in 0..MAX_DRAWS {
        let p = s.base().sample_point(rng);
        match s.at(&p) {
            Ok(sp) => return Ok(sp),
            Err(e @ GeometryError::SingularMetric { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(GeometryError::InvalidParameter("no sample drawn".into())))
}

struct Acc {
    names: Vec<&'static str>,
    max: Vec<f64>,
}

impl Acc {
    fn push(&mut self, name: &'static str, r: f64) {
        match self.names.iter().position(|n| *n == name) {
            Some(i) => self.max[i] = self.max[i].max(r),
            None => {
                self.names.push(name);
                self.max.push(r);
            }
        }
    }
}

/// Checks every structure axiom at `points` seeded points, 8 vector pairs each.
pub fn validate_structure(s: &WeakStructure, points: usize, seed: u64) -> AxiomReport {
    let d = s.dim();
    let mut acc = Acc { names: vec![], max: vec![] };
    let mut failures = Vec::new();
    for i in 0..points {
        let mut rng = rng_for(seed, s.name(), i as u64);
        let p = s.base().sample_point(&mut rng);
        let sp = match s.at(&p) {
            Ok(sp) => sp,
            Err(e) => {
                failures.push(format!("point {i}: {e}"));
                continue;
            }
        };
        let xi = sp.xi().clone();
        acc.push("eta_xi", rel_scalar(sp.eta(&xi), 1.0));
        acc.push("phi_xi", sp.rel(&sp.phi(&xi), &DVector::zeros(d)));
        let qmin = min_eigenvalue(sp.metric(), sp.q_matrix()).unwrap_or(f64::NEG_INFINITY);
        acc.push("q_positive", (Q_POSITIVITY - qmin).max(0.0));
        for _ in 0..8 {
            let x = random_vector(&mut rng, d);
            let y = random_vector(&mut rng, d);
            acc.push(
                "compatibility",
                rel_scalar(sp.g(&sp.phi(&x), &sp.phi(&y)), sp.g(&x, &sp.q(&y)) - sp.eta(&x) * sp.eta(&y)),
            );
            acc.push("eta_phi", rel_scalar(sp.eta(&sp.phi(&x)), 0.0));
            acc.push("eta_q", rel_scalar(sp.eta(&sp.q(&x)), sp.eta(&x)));
            acc.push("q_phi_commute", sp.rel(&sp.q(&sp.phi(&x)), &sp.phi(&sp.q(&x))));
            acc.push("phi_skew", rel_scalar(sp.g(&sp.phi(&x), &y), -sp.g(&x, &sp.phi(&y))));
            acc.push("q_self_adjoint", rel_scalar(sp.g(&sp.q(&x), &y), sp.g(&x, &sp.q(&y))));
            acc.push("eta_g_dual", rel_scalar(sp.eta(&x), sp.g(&xi, &x)));
        }
    }
    let entries = acc
        .names
        .iter()
        .zip(&acc.max)
        .map(|(&name, &r)| AxiomEntry {
            name,
            max_residual: r,
            pass: if name == "q_positive" { r == 0.0 } else { r < AXIOM_TOL },
        })
        .collect();
    AxiomReport { structure: s.name().to_string(), points, entries, structural_failures: failures }
}

/// `h = ∇ξ + φ`, `Q̃ = Q − id` and `∇ξ` at `p`.
pub fn compute_h(s: &WeakStructure, p: &[f64]) -> Result<DerivedTensors> {
    let sp = s.at(p)?;
    Ok(DerivedTensors {
        h: sp.h_matrix().clone(),
        q_tilde: sp.qt_matrix().clone(),
        nabla_xi: sp.h_matrix() - sp.phi_matrix(),
    })
}

/// `(∇_Y φ)Y − g(Y,Y)ξ + η(Y)Y`.
pub fn nearly_sasakian_residual(s: &WeakStructure, p: &[f64], y: &DVector<f64>) -> Result<DVector<f64>> {
    let sp = s.at(p)?;
    Ok(nearly_sasakian_vector(&sp, y))
}

pub(crate) fn nearly_sasakian_vector(sp: &StructurePoint, y: &DVector<f64>) -> DVector<f64> {
    sp.nphi(y, y) - sp.xi() * sp.g(y, y) + y * sp.eta(y)
}

/// Relative residuals of the Sasakian formula `(∇_X φ)Y = g(X,Y)ξ − η(Y)X`
/// and of normality `[φ,φ](X,Y) + 2dη(X,Y)ξ = 0`.
pub fn sasakian_residuals(
    s: &WeakStructure,
    p: &[f64],
    x: &DVector<f64>,
    y: &DVector<f64>,
) -> Result<(f64, f64)> {
    let sp = s.at(p)?;
    Ok(sasakian_pair(&sp, x, y))
}

pub(crate) fn sasakian_pair(sp: &StructurePoint, x: &DVector<f64>, y: &DVector<f64>) -> (f64, f64) {
    let lhs = sp.nphi(x, y);
    let rhs = sp.xi() * sp.g(x, y) - x * sp.eta(y);
    let formula = sp.rel(&lhs, &rhs);
    let n = sp.nijenhuis(x, y);
    let t = sp.xi() * (2.0 * sp.d_eta(x, y));
    let normality = sp.rel(&n, &(-t));
    (formula, normality)
}

/// `δ(X,Y,Z,V)` at `p`.
pub fn delta(
    s: &WeakStructure,
    p: &[f64],
    x: &DVector<f64>,
    y: &DVector<f64>,
    z: &DVector<f64>,
    v: &DVector<f64>,
) -> Result<f64> {
    Ok(s.at(p)?.delta(x, y, z, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{model, registry};
    use nalgebra::dmatrix;
    use proptest::prelude::*;

    fn points(name: &str, n: u64) -> (WeakStructure, Vec<StructurePoint>) {
        let s = model(name).unwrap().structure().clone();
        let pts = (0..n).map(|i| sample_structure_point(&s, &mut rng_for(4, "validate-test", i)).unwrap()).collect();
        (s, pts)
    }

    #[test]
    fn corpus_satisfies_the_axioms() {
        for m in registry() {
            let rep = validate_structure(m.structure(), 10, 1);
            assert!(rep.passed(), "{}: {:?}", m.name(), rep.entries);
            assert_eq!(rep.entries.len(), 10);
        }
    }

    #[test]
    fn broken_phi_and_q_are_caught() {
        let base = model("sas-r5").unwrap().structure().clone();
        let s = base.clone().map_fields(|_, mut f| {
            for row in &mut f.phi {
                for e in row.iter_mut() {
                    *e *= 1.05;
                }
            }
            f
        });
        let rep = validate_structure(&s, 3, 1);
        assert!(!rep.entry("compatibility").unwrap().pass);
        assert!(rep.entry("phi_skew").unwrap().pass);

        let s = base.map_fields(|_, mut f| {
            for row in &mut f.q {
                for e in row.iter_mut() {
                    *e *= -1.0;
                }
            }
            f
        });
        let rep = validate_structure(&s, 3, 1);
        assert!(!rep.entry("q_positive").unwrap().pass);
        assert!(!rep.passed());
    }

    #[test]
    fn h_vanishes_exactly_on_sasakian_models() {
        for name in ["sas-r5", "sas-s5", "sas-r7", "sas-s7"] {
            let (s, pts) = points(name, 3);
            for sp in &pts {
                let t = compute_h(&s, sp.point()).unwrap();
                assert!(t.h.norm() < 1e-10, "{name}: {:e}", t.h.norm());
                assert!(t.q_tilde.norm() < 1e-14);
                assert!((t.nabla_xi + sp.phi_matrix()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn nearly_sasakian_sphere_is_not_sasakian() {
        let (s, pts) = points("nsas-s5", 10);
        let mut rng = rng_for(4, "vectors", 0);
        let mut big = 0;
        for sp in &pts {
            let (x, y) = (random_vector(&mut rng, 5), random_vector(&mut rng, 5));
            let y_res = nearly_sasakian_residual(&s, sp.point(), &y).unwrap();
            assert!(y_res.norm() < 1e-10);
            let (formula, _) = sasakian_residuals(&s, sp.point(), &x, &y).unwrap();
            big += (formula > 0.1) as usize;
            let h = sp.h_matrix();
            assert!((h * sp.xi()).norm() < 1e-10);
            let gh = sp.metric() * h;
            assert!((&gh + gh.transpose()).norm() < 1e-10, "h is skew-adjoint");
        }
        assert!(big >= 9);
    }

    #[test]
    fn sasakian_models_are_normal() {
        for name in ["sas-r5", "sas-s7"] {
            let (s, pts) = points(name, 3);
            let mut rng = rng_for(4, "vectors", 1);
            for sp in &pts {
                let d = sp.dim();
                let (x, y) = (random_vector(&mut rng, d), random_vector(&mut rng, d));
                let (formula, normality) = sasakian_residuals(&s, sp.point(), &x, &y).unwrap();
                assert!(formula < 1e-10 && normality < 1e-10, "{name}: {formula:e} {normality:e}");
            }
        }
    }

    #[test]
    fn weak_deformation_is_not_nearly_sasakian() {
        let (s, pts) = points("weak-r5-a1.5", 2);
        let y = DVector::from_vec(vec![0.3, -0.2, 0.5, 0.1, 0.0]);
        assert!(nearly_sasakian_residual(&s, pts[0].point(), &y).unwrap().norm() > 1e-3);
    }

    #[test]
    fn delta_vanishes_when_q_is_the_identity() {
        let (s, pts) = points("nsas-s5", 2);
        let mut rng = rng_for(4, "vectors", 2);
        let v: Vec<_> = (0..4).map(|_| random_vector(&mut rng, 5)).collect();
        let d = delta(&s, pts[0].point(), &v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(d.abs() < 1e-12);
    }

    #[test]
    fn min_eigenvalue_of_a_g_self_adjoint_operator() {
        let g = dmatrix![1.0, 0.0; 0.0, 4.0];
        assert!((min_eigenvalue(&g, &dmatrix![2.0, 0.0; 0.0, 3.0]).unwrap() - 2.0).abs() < 1e-14);
        // A = g⁻¹S with S symmetric: eigenvalues of the pencil (S, g).
        let s = dmatrix![2.0, 1.0; 1.0, 2.0];
        let a = g.clone().try_inverse().unwrap() * &s;
        // det(S − μg) = (2−μ)(2−4μ) − 1 = 4μ² − 10μ + 3.
        let expected = (10.0 - (100.0f64 - 48.0).sqrt()) / 8.0;
        assert!((min_eigenvalue(&g, &a).unwrap() - expected).abs() < 1e-13);
        assert!(min_eigenvalue(&dmatrix![1.0, 0.0; 0.0, -1.0], &g).is_err());
    }

    proptest! {
        #[test]
        fn relative_residual_is_bounded(l in -1e6f64..1e6, r in -1e6f64..1e6) {
            let a = rel_scalar(l, r);
            prop_assert!((0.0..1.0).contains(&a));
            prop_assert_eq!(a, rel_scalar(r, l));
            prop_assert_eq!(rel_scalar(l, l), 0.0);
        }
    }
}
