//! Levi-Civita connection, covariant derivatives and curvature on one chart.
//!
//! Curvature convention: `R_{X,Y} = ∇_X∇_Y − ∇_Y∇_X − ∇_{[X,Y]}`; the stored
//! component `R^a_{bcd}` is the `e_a` coefficient of `R_{e_c,e_d} e_b`.

use nalgebra::{DMatrix, DVector};

use super::jet::Jet;
use super::manifold::{ensure_spd, invert_jet_matrix, ChartManifold};
use super::tensor::{multi_indices, Slot, Tensor, TensorFieldComponents, Valence};
use crate::error::{GeometryError, Result};

/// Christoffel symbols `Γ^k_{ij}` and their first partials at a point.
#[derive(Clone, Debug)]
pub struct Christoffel {
    dim: usize,
    gamma: Vec<f64>,
    dgamma: Vec<f64>,
}

impl Christoffel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self, k: usize, i: usize, j: usize) -> f64 {
        let d = self.dim;
        self.gamma[(k * d + i) * d + j]
    }

    /// `∂_l Γ^k_{ij}`.
    pub fn dgamma(&self, l: usize, k: usize, i: usize, j: usize) -> f64 {
        let d = self.dim;
        self.dgamma[((l * d + k) * d + i) * d + j]
    }
}

/// Everything the kernel derives from the metric at a single point.
#[derive(Clone, Debug)]
pub struct LocalGeometry {
    point: Vec<f64>,
    dim: usize,
    metric: DMatrix<f64>,
    metric_inv: DMatrix<f64>,
    metric_jets: Vec<Vec<Jet>>,
    gamma: Vec<Jet>,
    riemann: Vec<f64>,
}

impl LocalGeometry {
    pub fn at(m: &ChartManifold, p: &[f64]) -> Result<Self> {
        let g = m.metric_jets(p)?;
        Self::from_metric_jets(p, g)
    }

    pub fn from_metric_jets(p: &[f64], g: Vec<Vec<Jet>>) -> Result<Self> {
        let d = p.len();
        let metric = DMatrix::from_fn(d, d, |i, j| g[i][j].value());
        ensure_spd(&metric, p)?;
        let ginv = invert_jet_matrix(&g).ok_or(GeometryError::SingularMetric { point: p.to_vec() })?;
        let metric_inv = DMatrix::from_fn(d, d, |i, j| ginv[i][j].value());

        // ∂_c g_ab as order-1 jets, indexed [c][a][b].
        let dg: Vec<Vec<Vec<Jet>>> = (0..d)
            .map(|c| (0..d).map(|a| (0..d).map(|b| g[a][b].partial(c)).collect()).collect())
            .collect();
        let mut gamma = vec![Jet::zero(); d * d * d];
        for k in 0..d {
            for i in 0..d {
                for j in i..d {
                    let mut acc = Jet::zero();
                    for mm in 0..d {
                        let bracket = dg[i][mm][j] + dg[j][mm][i] - dg[mm][i][j];
                        acc += ginv[k][mm] * bracket;
                    }
                    let v = acc * 0.5;
                    gamma[(k * d + i) * d + j] = v;
                    gamma[(k * d + j) * d + i] = v;
                }
            }
        }

        let mut riemann = vec![0.0; d * d * d * d];
        let gv = |a: usize, b: usize, c: usize| gamma[(a * d + b) * d + c];
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for dd in 0..d {
                        let mut r = gv(a, dd, b).grad(c) - gv(a, c, b).grad(dd);
                        for e in 0..d {
                            r += gv(a, c, e).value() * gv(e, dd, b).value()
                                - gv(a, dd, e).value() * gv(e, c, b).value();
                        }
                        riemann[((a * d + b) * d + c) * d + dd] = r;
                    }
                }
            }
        }

        Ok(Self { point: p.to_vec(), dim: d, metric, metric_inv, metric_jets: g, gamma, riemann })
    }

    pub fn point(&self) -> &[f64] {
        &self.point
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> &DMatrix<f64> {
        &self.metric
    }

    pub fn metric_inv(&self) -> &DMatrix<f64> {
        &self.metric_inv
    }

    pub fn metric_jets(&self) -> &[Vec<Jet>] {
        &self.metric_jets
    }

    /// Christoffel symbols as order-1 jets, indexed `[k][i][j]` flattened.
    pub fn gamma_jets(&self) -> &[Jet] {
        &self.gamma
    }

    pub fn christoffel(&self) -> Christoffel {
        let d = self.dim;
        let gamma = self.gamma.iter().map(|j| j.value()).collect();
        let mut dgamma = vec![0.0; d * d * d * d];
        for l in 0..d {
            for (n, gj) in self.gamma.iter().enumerate() {
                dgamma[l * d * d * d + n] = gj.grad(l);
            }
        }
        Christoffel { dim: d, gamma, dgamma }
    }

    pub fn g(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        x.dot(&(&self.metric * y))
    }

    /// `R^a_{bcd}`.
    pub fn riemann_component(&self, a: usize, b: usize, c: usize, dd: usize) -> f64 {
        let d = self.dim;
        self.riemann[((a * d + b) * d + c) * d + dd]
    }

    /// `R_{X,Y} Z`.
    pub fn riemann(&self, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>) -> DVector<f64> {
        let d = self.dim;
        let mut out = DVector::zeros(d);
        for a in 0..d {
            let mut s = 0.0;
            for b in 0..d {
                if z[b] == 0.0 {
                    continue;
                }
                for c in 0..d {
                    if x[c] == 0.0 {
                        continue;
                    }
                    for dd in 0..d {
                        s += self.riemann[((a * d + b) * d + c) * d + dd] * z[b] * x[c] * y[dd];
                    }
                }
            }
            out[a] = s;
        }
        out
    }

    /// Covariant derivative of a jet-valued tensor. The new covariant slot is
    /// placed first; the result is one derivative order lower than the input.
    pub fn nabla(&self, t: &Tensor<Jet>) -> Tensor<Jet> {
        let d = self.dim;
        assert_eq!(t.dim(), d);
        let rank = t.rank();
        let mut slots = Vec::with_capacity(rank + 1);
        slots.push(Slot::Down);
        slots.extend_from_slice(t.slots());
        let mut out = Tensor::filled(d, slots, Jet::zero());
        let gam = |k: usize, i: usize, j: usize| self.gamma[(k * d + i) * d + j];
        for idx in multi_indices(d, rank) {
            let base = *t.get(&idx);
            for k in 0..d {
                let mut acc = base.partial(k);
                let mut moved = idx.clone();
                for (s, slot) in t.slots().iter().enumerate() {
                    let orig = idx[s];
                    for m in 0..d {
                        moved[s] = m;
                        let comp = *t.get(&moved);
                        match slot {
                            Slot::Up => acc += gam(orig, k, m) * comp,
                            Slot::Down => acc -= gam(m, k, orig) * comp,
                        }
                    }
                    moved[s] = orig;
                }
                let mut full = Vec::with_capacity(rank + 1);
                full.push(k);
                full.extend_from_slice(&idx);
                out.set(&full, acc);
            }
        }
        out
    }
}

/// Christoffel symbols and their first partials at `p`.
pub fn christoffel(m: &ChartManifold, p: &[f64]) -> Result<Christoffel> {
    Ok(LocalGeometry::at(m, p)?.christoffel())
}

/// `∇T` at `p`, with the derivative slot first.
pub fn covariant_derivative(
    m: &ChartManifold,
    t: &TensorFieldComponents,
    p: &[f64],
) -> Result<Tensor<f64>> {
    if t.valence() == Valence::Scalar {
        return Err(GeometryError::UnsupportedValence("scalar (use the gradient)".into()));
    }
    let geo = LocalGeometry::at(m, p)?;
    let comps = t.eval(&Jet::seed(p))?;
    Ok(geo.nabla(&comps).values())
}

/// `(∇²_{e_l, e_k} T)^i_j` for a (1,1) field `T`, slots `[l, k, i, j]`.
pub fn second_covariant_derivative_11(
    m: &ChartManifold,
    t: &TensorFieldComponents,
    p: &[f64],
) -> Result<Tensor<f64>> {
    if t.valence() != Valence::Mixed11 {
        return Err(GeometryError::UnsupportedValence(format!("{:?}", t.valence())));
    }
    let geo = LocalGeometry::at(m, p)?;
    let comps = t.eval(&Jet::seed(p))?;
    let first = geo.nabla(&comps);
    Ok(geo.nabla(&first).values())
}

/// `R_{X,Y} Z` at `p`.
pub fn riemann(
    m: &ChartManifold,
    p: &[f64],
    x: &DVector<f64>,
    y: &DVector<f64>,
    z: &DVector<f64>,
) -> Result<DVector<f64>> {
    Ok(LocalGeometry::at(m, p)?.riemann(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_sphere_chart(dim: usize) -> ChartManifold {
        ChartManifold::new(format!("round-s{dim}"), dim, move |x| {
            let s = Jet::sum(x.iter().map(|&xi| xi * xi));
            let f = 4.0 / ((1.0 + s) * (1.0 + s));
            (0..dim)
                .map(|i| (0..dim).map(|j| if i == j { f } else { Jet::zero() }).collect())
                .collect()
        })
    }

    #[test]
    fn flat_metric_has_vanishing_christoffels() {
        let c = christoffel(&ChartManifold::euclidean(3), &[0.1, 0.2, -0.3]).unwrap();
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(c.gamma(k, i, j), 0.0);
                }
            }
        }
    }

    #[test]
    fn conformal_sphere_christoffels_match_closed_form() {
        // g = e^{2λ} δ with λ = log(2/(1+|x|^2)):
        // Γ^k_ij = δ^k_i ∂_j λ + δ^k_j ∂_i λ − δ_ij ∂_k λ, ∂_i λ = −2 x_i / (1+|x|^2).
        let p = [0.3, -0.1];
        let c = christoffel(&round_sphere_chart(2), &p).unwrap();
        let s = p[0] * p[0] + p[1] * p[1];
        let dl = |i: usize| -2.0 * p[i] / (1.0 + s);
        let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        for k in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    let expected = delta(k, i) * dl(j) + delta(k, j) * dl(i) - delta(i, j) * dl(k);
                    assert!((c.gamma(k, i, j) - expected).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn identity_field_is_parallel() {
        let m = round_sphere_chart(3);
        let id = TensorFieldComponents::identity(3);
        let p = [0.2, 0.5, -0.4];
        assert!(covariant_derivative(&m, &id, &p).unwrap().max_abs() < 1e-14);
        assert!(second_covariant_derivative_11(&m, &id, &p).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn unit_sphere_has_constant_curvature_one() {
        let m = round_sphere_chart(3);
        let p = [0.2, 0.5, -0.4];
        let geo = LocalGeometry::at(&m, &p).unwrap();
        let x = DVector::from_vec(vec![0.3, -1.0, 0.2]);
        let y = DVector::from_vec(vec![0.7, 0.1, 0.5]);
        let z = DVector::from_vec(vec![-0.2, 0.4, 0.9]);
        let lhs = geo.riemann(&x, &y, &z);
        let rhs = &x * geo.g(&y, &z) - &y * geo.g(&x, &z);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn scalar_valence_is_rejected() {
        let f = TensorFieldComponents::new(Valence::Scalar, |x| vec![x[0]]);
        let err = covariant_derivative(&ChartManifold::euclidean(2), &f, &[0.0, 0.0]).unwrap_err();
        assert!(matches!(err, GeometryError::UnsupportedValence(_)));
    }
}
