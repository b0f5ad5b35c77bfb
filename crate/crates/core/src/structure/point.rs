use nalgebra::{DMatrix, DVector};

use super::WeakStructure;
use crate::error::{GeometryError, Result};
use crate::kernel::forms::{exterior_derivative_jets, two_form_from_matrix};
use crate::kernel::tensor::{Slot, Tensor};
use crate::kernel::{Jet, LocalGeometry};

/// A structure evaluated at one point: values of `φ, Q, ξ, η, h` and the
/// covariant derivatives and curvature the identity catalog needs.
///
/// Matrices act on coordinate component vectors: `φX = phi * x`.
#[derive(Clone, Debug)]
pub struct StructurePoint {
    geo: LocalGeometry,
    phi: DMatrix<f64>,
    q: DMatrix<f64>,
    qt: DMatrix<f64>,
    h: DMatrix<f64>,
    xi: DVector<f64>,
    eta: DVector<f64>,
    /// `dphi[m] = ∂_m φ`.
    dphi: Vec<DMatrix<f64>>,
    /// `deta[(m, j)] = ∂_m η_j`.
    deta: DMatrix<f64>,
    /// `dxi[(m, i)] = ∂_m ξ^i`.
    dxi: DMatrix<f64>,
    nphi: Vec<DMatrix<f64>>,
    nh: Vec<DMatrix<f64>>,
    nq: Vec<DMatrix<f64>>,
    /// `nxi * X = ∇_X ξ`.
    nxi: DMatrix<f64>,
    /// `neta[(k, j)] = (∇_k η)_j`.
    neta: DMatrix<f64>,
    n2phi: Vec<Vec<DMatrix<f64>>>,
    phi_jets: Vec<Vec<Jet>>,
    q_jets: Vec<Vec<Jet>>,
    h_jets: Vec<Vec<Jet>>,
}

fn to_matrix(m: &[Vec<Jet>]) -> DMatrix<f64> {
    let d = m.len();
    DMatrix::from_fn(d, d, |i, j| m[i][j].value())
}

fn mixed(m: &[Vec<Jet>]) -> Tensor<Jet> {
    let d = m.len();
    let data = m.iter().flat_map(|row| row.iter().copied()).collect();
    Tensor::from_vec(d, vec![Slot::Up, Slot::Down], data).expect("square component matrix")
}

fn slices3(t: &Tensor<f64>) -> Vec<DMatrix<f64>> {
    let d = t.dim();
    (0..d).map(|k| DMatrix::from_fn(d, d, |i, j| *t.get(&[k, i, j]))).collect()
}

fn jet_matmul(a: &[Vec<Jet>], b: &[Vec<Jet>]) -> Vec<Vec<Jet>> {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| Jet::sum((0..d).map(|k| a[i][k] * b[k][j]))).collect())
        .collect()
}

impl StructurePoint {
    pub fn new(s: &WeakStructure, p: &[f64]) -> Result<Self> {
        let d = s.dim();
        let metric = s.base().metric_jets(p)?;
        let geo = LocalGeometry::from_metric_jets(p, metric)?;
        let coords = Jet::seed(p);
        let f = s.fields_on(&coords);
        let square = |m: &Vec<Vec<Jet>>| m.len() == d && m.iter().all(|r| r.len() == d);
        if !square(&f.phi) || !square(&f.q) || f.xi.len() != d || f.eta.len() != d {
            return Err(GeometryError::DimensionMismatch { expected: d, got: f.xi.len() });
        }

        let phi_t = mixed(&f.phi);
        let nphi_t = geo.nabla(&phi_t);
        let n2phi_t = geo.nabla(&nphi_t).values();
        let nphi_v = nphi_t.values();

        let xi_t = Tensor::from_vec(d, vec![Slot::Up], f.xi.clone())?;
        let nxi_t = geo.nabla(&xi_t);
        let h_jets: Vec<Vec<Jet>> =
            (0..d).map(|i| (0..d).map(|j| *nxi_t.get(&[j, i]) + f.phi[i][j]).collect()).collect();
        let nh = slices3(&geo.nabla(&mixed(&h_jets)).values());
        let nq = slices3(&geo.nabla(&mixed(&f.q)).values());
        let eta_t = Tensor::from_vec(d, vec![Slot::Down], f.eta.clone())?;
        let neta_t = geo.nabla(&eta_t).values();

        let phi = to_matrix(&f.phi);
        let q = to_matrix(&f.q);
        let qt = &q - DMatrix::identity(d, d);
        let h = to_matrix(&h_jets);
        Ok(Self {
            phi,
            q,
            qt,
            h,
            xi: DVector::from_iterator(d, f.xi.iter().map(|j| j.value())),
            eta: DVector::from_iterator(d, f.eta.iter().map(|j| j.value())),
            dphi: (0..d).map(|m| DMatrix::from_fn(d, d, |i, j| f.phi[i][j].grad(m))).collect(),
            deta: DMatrix::from_fn(d, d, |m, j| f.eta[j].grad(m)),
            dxi: DMatrix::from_fn(d, d, |m, i| f.xi[i].grad(m)),
            nphi: slices3(&nphi_v),
            nh,
            nq,
            nxi: DMatrix::from_fn(d, d, |i, k| nxi_t.get(&[k, i]).value()),
            neta: DMatrix::from_fn(d, d, |k, j| *neta_t.get(&[k, j])),
            n2phi: (0..d)
                .map(|l| {
                    (0..d)
                        .map(|k| DMatrix::from_fn(d, d, |i, j| *n2phi_t.get(&[l, k, i, j])))
                        .collect()
                })
                .collect(),
            phi_jets: f.phi,
            q_jets: f.q,
            h_jets,
            geo,
        })
    }

    pub fn geometry(&self) -> &LocalGeometry {
        &self.geo
    }

    pub fn point(&self) -> &[f64] {
        self.geo.point()
    }

    pub fn dim(&self) -> usize {
        self.geo.dim()
    }

    pub fn metric(&self) -> &DMatrix<f64> {
        self.geo.metric()
    }

    pub fn phi_matrix(&self) -> &DMatrix<f64> {
        &self.phi
    }

    pub fn q_matrix(&self) -> &DMatrix<f64> {
        &self.q
    }

    pub fn qt_matrix(&self) -> &DMatrix<f64> {
        &self.qt
    }

    pub fn h_matrix(&self) -> &DMatrix<f64> {
        &self.h
    }

    /// Components of `h` as order-1 jets.
    pub fn h_jets(&self) -> &[Vec<Jet>] {
        &self.h_jets
    }

    pub fn xi(&self) -> &DVector<f64> {
        &self.xi
    }

    /// Covector components of `η`.
    pub fn eta_covector(&self) -> &DVector<f64> {
        &self.eta
    }

    /// `∂_m (ξ ⊗ η)`, the coordinate derivative of the projector onto `[ξ]`.
    pub fn d_xi_projector(&self, m: usize) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| {
            self.dxi[(m, i)] * self.eta[j] + self.xi[i] * self.deta[(m, j)]
        })
    }

    /// `ξ ⊗ η`.
    pub fn xi_projector(&self) -> DMatrix<f64> {
        &self.xi * self.eta.transpose()
    }

    /// `∂_m (h²)`.
    pub fn d_h_squared(&self, m: usize) -> DMatrix<f64> {
        let d = self.dim();
        let dh = DMatrix::from_fn(d, d, |i, j| self.h_jets[i][j].grad(m));
        &dh * &self.h + &self.h * &dh
    }

    pub fn g(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        self.geo.g(x, y)
    }

    pub fn norm(&self, x: &DVector<f64>) -> f64 {
        self.g(x, x).max(0.0).sqrt()
    }

    /// `‖L − R‖_g / (1 + ‖L‖_g + ‖R‖_g)`.
    pub fn rel(&self, l: &DVector<f64>, r: &DVector<f64>) -> f64 {
        self.norm(&(l - r)) / (1.0 + self.norm(l) + self.norm(r))
    }

    pub fn eta(&self, x: &DVector<f64>) -> f64 {
        self.eta.dot(x)
    }

    pub fn phi(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.phi * x
    }

    pub fn q(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.q * x
    }

    pub fn qt(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.qt * x
    }

    pub fn h(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.h * x
    }

    /// `(h − φ)X`.
    pub fn hp(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.h * x - &self.phi * x
    }

    /// `∇_X ξ`.
    pub fn nabla_xi(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.nxi * x
    }

    /// `(∇_X η)(Y)`.
    pub fn nabla_eta(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        x.dot(&(&self.neta * y))
    }

    fn contract(slices: &[DMatrix<f64>], x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(y.len());
        for (k, m) in slices.iter().enumerate() {
            if x[k] != 0.0 {
                out += m * y * x[k];
            }
        }
        out
    }

    /// `(∇_X φ)Y`.
    pub fn nphi(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        Self::contract(&self.nphi, x, y)
    }

    /// `(∇_X h)Y`.
    pub fn nh(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        Self::contract(&self.nh, x, y)
    }

    /// `(∇_X Q)Y`, which equals `(∇_X Q̃)Y`.
    pub fn nq(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        Self::contract(&self.nq, x, y)
    }

    /// `(∇_X (h − φ))Y`.
    pub fn nhp(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        self.nh(x, y) - self.nphi(x, y)
    }

    /// `(∇_X (φh))Y = (∇_X φ)hY + φ(∇_X h)Y`.
    pub fn nphih(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        self.nphi(x, &self.h(y)) + self.phi(&self.nh(x, y))
    }

    /// `(∇²_{X,Y} φ)Z`.
    pub fn n2phi(&self, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(z.len());
        for (l, row) in self.n2phi.iter().enumerate() {
            if x[l] == 0.0 {
                continue;
            }
            for (k, m) in row.iter().enumerate() {
                if y[k] != 0.0 {
                    out += m * z * (x[l] * y[k]);
                }
            }
        }
        out
    }

    /// `R_{X,Y} Z`.
    pub fn r(&self, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>) -> DVector<f64> {
        self.geo.riemann(x, y, z)
    }

    /// `g(R_{X,Y} Z, V)`.
    pub fn rg(&self, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>, v: &DVector<f64>) -> f64 {
        self.g(&self.r(x, y, z), v)
    }

    /// `δ(X,Y,Z,V) = g(R_{X,Y}Q̃Z, V) + g(R_{X,Y}Z, Q̃V) − g(R_{Q̃X,Y}Z, V) − g(R_{X,Q̃Y}Z, V)`.
    pub fn delta(&self, x: &DVector<f64>, y: &DVector<f64>, z: &DVector<f64>, v: &DVector<f64>) -> f64 {
        self.rg(x, y, &self.qt(z), v) + self.rg(x, y, z, &self.qt(v))
            - self.rg(&self.qt(x), y, z, v)
            - self.rg(x, &self.qt(y), z, v)
    }

    /// `(∂_X φ)Y` for constant-component `X, Y`.
    fn dphi_dir(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        Self::contract(&self.dphi, x, y)
    }

    /// Nijenhuis torsion `[φ,φ](X,Y)` of constant-component fields.
    pub fn nijenhuis(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let px = self.phi(x);
        let py = self.phi(y);
        // [X,Y] = 0 for constant fields.
        let br_pp = self.dphi_dir(&px, y) - self.dphi_dir(&py, x);
        let br_px_y = -self.dphi_dir(y, x);
        let br_x_py = self.dphi_dir(x, y);
        br_pp - self.phi(&br_px_y) - self.phi(&br_x_py)
    }

    /// `dη(X,Y) = ½{X η(Y) − Y η(X) − η([X,Y])}`.
    pub fn d_eta(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        0.5 * (x.dot(&(&self.deta * y)) - y.dot(&(&self.deta * x)))
    }

    /// Orthonormal basis of `ker η` from coordinate vectors, dropping the one
    /// with the largest `|η|` component.
    pub fn kernel_basis(&self) -> Vec<DVector<f64>> {
        let d = self.dim();
        let drop = (0..d)
            .max_by(|&a, &b| self.eta[a].abs().total_cmp(&self.eta[b].abs()))
            .unwrap_or(0);
        let mut basis: Vec<DVector<f64>> = Vec::with_capacity(d - 1);
        for i in (0..d).filter(|&i| i != drop) {
            let mut v = self.project_ker(&DVector::from_fn(d, |k, _| if k == i { 1.0 } else { 0.0 }));
            for b in &basis {
                v -= b * self.g(b, &v);
            }
            let n = self.norm(&v);
            if n > 1e-12 {
                basis.push(v / n);
            }
        }
        basis
    }

    /// `X − η(X)ξ`.
    pub fn project_ker(&self, x: &DVector<f64>) -> DVector<f64> {
        x - &self.xi * self.eta(x)
    }

    /// Matrix of the 2-form `(X, Y) ↦ g(AX, Y)`: entry `(i, j)` is `g(A e_i, e_j)`.
    pub fn bilinear_of(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        a.transpose() * self.metric()
    }

    /// Antisymmetric 2-form `(X, Y) ↦ g(AX, Y)`.
    pub fn two_form_of(&self, a: &DMatrix<f64>) -> Tensor<f64> {
        two_form_from_matrix(self.dim(), &self.bilinear_of(a))
    }

    /// The 1-form `η` as a tensor.
    pub fn eta_form(&self) -> Tensor<f64> {
        Tensor::from_vec(self.dim(), vec![Slot::Down], self.eta.iter().copied().collect())
            .expect("dimension matches")
    }

    /// `dη` computed from coordinate partials.
    pub fn d_eta_form(&self) -> Tensor<f64> {
        let d = self.dim();
        let mut out = Tensor::filled(d, vec![Slot::Down; 2], 0.0);
        for i in 0..d {
            for j in 0..d {
                out.set(&[i, j], 0.5 * (self.deta[(i, j)] - self.deta[(j, i)]));
            }
        }
        out
    }

    fn d_of_operator_form(&self, a: &[Vec<Jet>]) -> Tensor<f64> {
        // ω_ij = g(A e_i, e_j) = g_jm A^m_i, antisymmetrised, then d.
        let d = self.dim();
        let g = self.geo.metric_jets();
        let raw: Vec<Vec<Jet>> = (0..d)
            .map(|i| (0..d).map(|j| Jet::sum((0..d).map(|m| g[j][m] * a[m][i]))).collect())
            .collect();
        let mut w = Tensor::filled(d, vec![Slot::Down; 2], Jet::zero());
        for i in 0..d {
            for j in 0..d {
                w.set(&[i, j], (raw[i][j] - raw[j][i]) * 0.5);
            }
        }
        exterior_derivative_jets(&w).expect("2-form").values()
    }

    /// `dΦ₀` for `Φ₀(X,Y) = g(hX, Y)`, from coordinate partials.
    pub fn d_phi0(&self) -> Tensor<f64> {
        self.d_of_operator_form(&self.h_jets)
    }

    /// `dΦ₁` for `Φ₁(X,Y) = g(φhX, Y)`.
    pub fn d_phi1(&self) -> Tensor<f64> {
        self.d_of_operator_form(&jet_matmul(&self.phi_jets, &self.h_jets))
    }

    /// `dΨ₀` for `Ψ₀(X,Y) = g(Q̃X, Y)`.
    pub fn d_psi0(&self) -> Tensor<f64> {
        let d = self.dim();
        let qt: Vec<Vec<Jet>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { self.q_jets[i][j] - 1.0 } else { self.q_jets[i][j] }).collect())
            .collect();
        self.d_of_operator_form(&qt)
    }
}
