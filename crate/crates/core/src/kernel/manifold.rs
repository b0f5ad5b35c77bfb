//! Single-chart Riemannian manifolds with jet-valued metrics.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;

use super::jet::{Jet, MAX_DIM};
use crate::error::{GeometryError, Result};

pub type MetricFn = Arc<dyn Fn(&[Jet]) -> Vec<Vec<Jet>> + Send + Sync>;
pub type DomainFn = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// A chart `U ⊂ R^d` with a Riemannian metric written in its coordinates.
#[derive(Clone)]
pub struct ChartManifold {
    name: String,
    dim: usize,
    metric: MetricFn,
    domain: DomainFn,
    bounds: Vec<(f64, f64)>,
}

impl ChartManifold {
    /// A chart with the given metric, sampled from the box `[-1, 1]^dim`.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        metric: impl Fn(&[Jet]) -> Vec<Vec<Jet>> + Send + Sync + 'static,
    ) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "chart dimension must lie in 1..={MAX_DIM}");
        Self {
            name: name.into(),
            dim,
            metric: Arc::new(metric),
            domain: Arc::new(|_| true),
            bounds: vec![(-1.0, 1.0); dim],
        }
    }

    /// The flat metric `δ_ij` on `R^dim`.
    pub fn euclidean(dim: usize) -> Self {
        Self::new(format!("euclid-r{dim}"), dim, move |_| {
            (0..dim)
                .map(|i| {
                    (0..dim).map(|j| Jet::constant(if i == j { 1.0 } else { 0.0 })).collect()
                })
                .collect()
        })
    }

    pub fn with_domain(mut self, domain: impl Fn(&[f64]) -> bool + Send + Sync + 'static) -> Self {
        self.domain = Arc::new(domain);
        self
    }

    pub fn with_bounds(mut self, bounds: Vec<(f64, f64)>) -> Self {
        assert_eq!(bounds.len(), self.dim);
        self.bounds = bounds;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim
            && p.iter().all(|x| x.is_finite())
            && p.iter().zip(&self.bounds).all(|(x, (lo, hi))| x >= lo && x <= hi)
            && (self.domain)(p)
    }

    pub(crate) fn check_point(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, got: p.len() });
        }
        if !self.contains(p) {
            return Err(GeometryError::OutsideDomain {
                chart: self.name.clone(),
                point: p.to_vec(),
            });
        }
        Ok(())
    }

    /// Metric components as order-2 jets at `p`.
    pub fn metric_jets(&self, p: &[f64]) -> Result<Vec<Vec<Jet>>> {
        self.check_point(p)?;
        Ok(self.metric_on(&Jet::seed(p)))
    }

    /// Metric components on arbitrary coordinate jets (no domain check).
    pub fn metric_on(&self, coords: &[Jet]) -> Vec<Vec<Jet>> {
        (self.metric)(coords)
    }

    /// Metric value at `p`, checked to be symmetric positive definite.
    pub fn metric_at(&self, p: &[f64]) -> Result<DMatrix<f64>> {
        let jets = self.metric_jets(p)?;
        let g = DMatrix::from_fn(self.dim, self.dim, |i, j| jets[i][j].value());
        ensure_spd(&g, p)?;
        Ok(g)
    }

    /// Draws a point uniformly from the sampling box, rejecting points outside
    /// the domain predicate.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        loop {
            let p: Vec<f64> = self.bounds.iter().map(|&(lo, hi)| rng.gen_range(lo..hi)).collect();
            if self.contains(&p) {
                return p;
            }
        }
    }
}

impl fmt::Debug for ChartManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChartManifold")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("bounds", &self.bounds)
            .finish()
    }
}

pub(crate) fn ensure_spd(g: &DMatrix<f64>, p: &[f64]) -> Result<()> {
    let n = g.nrows();
    for i in 0..n {
        for j in 0..i {
            let scale = 1.0 + g[(i, j)].abs().max(g[(j, i)].abs());
            if (g[(i, j)] - g[(j, i)]).abs() > 1e-12 * scale {
                return Err(GeometryError::SingularMetric { point: p.to_vec() });
            }
        }
    }
    match g.clone().cholesky() {
        Some(c) => {
            let l = c.l();
            let diag_min = (0..n).map(|i| l[(i, i)]).fold(f64::INFINITY, f64::min);
            let diag_max = (0..n).map(|i| l[(i, i)]).fold(0.0, f64::max);
            if diag_min <= 1e-8 * diag_max.max(1e-300) {
                Err(GeometryError::SingularMetric { point: p.to_vec() })
            } else {
                Ok(())
            }
        }
        None => Err(GeometryError::SingularMetric { point: p.to_vec() }),
    }
}

/// Inverse of a square jet matrix by Gauss–Jordan elimination with partial
/// pivoting on the values.
pub fn invert_jet_matrix(m: &[Vec<Jet>]) -> Option<Vec<Vec<Jet>>> {
    let n = m.len();
    let mut a: Vec<Vec<Jet>> = m.to_vec();
    let mut inv: Vec<Vec<Jet>> = (0..n)
        .map(|i| (0..n).map(|j| Jet::constant(if i == j { 1.0 } else { 0.0 })).collect())
        .collect();
    let scale = m.iter().flatten().fold(0.0f64, |s, x| s.max(x.value().abs()));
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| a[r][col].value().abs().total_cmp(&a[s][col].value().abs()))?;
        if a[pivot][col].value().abs() <= 1e-14 * scale {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] = a[col][j] * p;
            inv[col][j] = inv[col][j] * p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col];
            if f.value() == 0.0 && f.order() == u8::MAX {
                continue;
            }
            for j in 0..n {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn jet_inverse_reproduces_identity_and_derivatives() {
        let v = Jet::seed(&[0.2, -0.4]);
        let m = vec![
            vec![2.0 + v[0] * v[0], v[0] * v[1]],
            vec![v[0] * v[1], 1.0 + v[1] * v[1]],
        ];
        let inv = invert_jet_matrix(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let e = Jet::sum((0..2).map(|k| m[i][k] * inv[k][j]));
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((e.value() - target).abs() < 1e-14);
                for a in 0..2 {
                    assert!(e.grad(a).abs() < 1e-14);
                    for b in 0..2 {
                        assert!(e.hess(a, b).abs() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn singular_metric_is_rejected() {
        let m = ChartManifold::new("degenerate", 2, |x| {
            vec![vec![x[0] * x[0], Jet::zero()], vec![Jet::zero(), Jet::constant(1.0)]]
        });
        assert!(matches!(m.metric_at(&[0.0, 0.3]), Err(GeometryError::SingularMetric { .. })));
        assert!(m.metric_at(&[0.5, 0.3]).is_ok());
    }

    #[test]
    fn sampling_respects_domain() {
        let m = ChartManifold::euclidean(3).with_domain(|p| p[0] > 0.5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(m.sample_point(&mut rng)[0] > 0.5);
        }
        assert!(matches!(m.metric_at(&[0.0, 0.0, 0.0]), Err(GeometryError::OutsideDomain { .. })));
    }
}
