//! Truncated second-order multivariate Taylor jets.
//!
//! A [`Jet`] carries the value, gradient and Hessian of a scalar field at a
//! point of a chart. Arithmetic propagates the order-2 chain rule exactly, so
//! metric and tensor components written as ordinary formulas in the chart
//! coordinates come with their first and second partials for free.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Largest chart dimension supported by the jet storage.
pub const MAX_DIM: usize = 9;

/// Marker for jets that are exact constants (valid to every order).
const EXACT: u8 = u8::MAX;

/// Value, gradient and Hessian of a scalar field at a point.
///
/// `order` records how many derivative levels are trustworthy: a jet built
/// from seeded coordinates is valid to order 2, its partial derivative only to
/// order 1, and so on. Arithmetic keeps the minimum of its operands.
#[derive(Clone, Copy)]
pub struct Jet {
    dim: u8,
    order: u8,
    value: f64,
    grad: [f64; MAX_DIM],
    hess: [[f64; MAX_DIM]; MAX_DIM],
}

impl Jet {
    /// A constant; compatible with jets of any dimension.
    pub fn constant(value: f64) -> Self {
        Self {
            dim: 0,
            order: EXACT,
            value,
            grad: [0.0; MAX_DIM],
            hess: [[0.0; MAX_DIM]; MAX_DIM],
        }
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    /// The coordinate function `x^index` of a `dim`-dimensional chart at `value`.
    pub fn variable(dim: usize, index: usize, value: f64) -> Self {
        assert!(dim <= MAX_DIM, "chart dimension {dim} exceeds MAX_DIM");
        assert!(index < dim, "coordinate index {index} out of range for dim {dim}");
        let mut grad = [0.0; MAX_DIM];
        grad[index] = 1.0;
        Self {
            dim: dim as u8,
            order: 2,
            value,
            grad,
            hess: [[0.0; MAX_DIM]; MAX_DIM],
        }
    }

    /// Seeds all coordinate jets of a point.
    pub fn seed(point: &[f64]) -> Vec<Jet> {
        let dim = point.len();
        point
            .iter()
            .enumerate()
            .map(|(i, &x)| Jet::variable(dim, i, x))
            .collect()
    }

    /// Builds a jet from explicit Taylor data (order 2).
    pub fn from_parts(value: f64, grad: &[f64], hess: &[Vec<f64>]) -> Self {
        let dim = grad.len();
        assert!(dim <= MAX_DIM);
        let mut out = Self::constant(value);
        out.dim = dim as u8;
        out.order = 2;
        out.grad[..dim].copy_from_slice(grad);
        for i in 0..dim {
            for j in 0..dim {
                out.hess[i][j] = 0.5 * (hess[i][j] + hess[j][i]);
            }
        }
        out
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Number of trustworthy derivative levels (0, 1, 2, or 255 for constants).
    #[inline]
    pub fn order(&self) -> u8 {
        self.order
    }

    #[inline]
    pub fn grad(&self, i: usize) -> f64 {
        debug_assert!(self.order >= 1, "gradient read from an order-0 jet");
        self.grad[i]
    }

    pub fn gradient(&self) -> Vec<f64> {
        debug_assert!(self.order >= 1, "gradient read from an order-0 jet");
        self.grad[..self.dim()].to_vec()
    }

    #[inline]
    pub fn hess(&self, i: usize, j: usize) -> f64 {
        debug_assert!(self.order >= 2, "Hessian read from a jet of order < 2");
        self.hess[i][j]
    }

    pub fn hessian(&self) -> Vec<Vec<f64>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.hess(i, j)).collect()).collect()
    }

    /// The partial derivative `∂_k` of this jet, one order lower.
    pub fn partial(&self, k: usize) -> Jet {
        debug_assert!(self.order >= 1, "partial of an order-0 jet");
        let d = self.dim();
        let mut out = Jet::constant(self.grad[k]);
        out.dim = self.dim;
        out.order = if self.order == EXACT { EXACT } else { self.order - 1 };
        for i in 0..d {
            out.grad[i] = self.hess[k][i];
        }
        out
    }

    /// Directional derivative `v^k ∂_k` of the jet, one order lower.
    pub fn directional(&self, v: &[f64]) -> Jet {
        let mut acc = Jet::zero();
        for (k, &vk) in v.iter().enumerate() {
            if vk != 0.0 {
                acc += self.partial(k) * vk;
            }
        }
        if acc.dim == 0 {
            acc.dim = self.dim;
            acc.order = if self.order == EXACT { EXACT } else { self.order.saturating_sub(1) };
        }
        acc
    }

    /// Applies a scalar function given its value and first two derivatives at
    /// `self.value()`.
    pub fn compose(&self, f: f64, df: f64, d2f: f64) -> Jet {
        let d = self.dim();
        let mut out = *self;
        out.value = f;
        for i in 0..d {
            out.grad[i] = df * self.grad[i];
        }
        for i in 0..d {
            for j in i..d {
                let h = df * self.hess[i][j] + d2f * self.grad[i] * self.grad[j];
                out.hess[i][j] = h;
                out.hess[j][i] = h;
            }
        }
        out
    }

    pub fn recip(&self) -> Jet {
        let v = self.value;
        self.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))
    }

    pub fn sqrt(&self) -> Jet {
        let s = self.value.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * s * s))
    }

    pub fn powi(&self, n: i32) -> Jet {
        let v = self.value;
        let nf = n as f64;
        let (d1, d2) = match n {
            0 => (0.0, 0.0),
            1 => (1.0, 0.0),
            _ => (nf * v.powi(n - 1), nf * (nf - 1.0) * v.powi(n - 2)),
        };
        self.compose(v.powi(n), d1, d2)
    }

    pub fn powf(&self, p: f64) -> Jet {
        let v = self.value;
        self.compose(v.powf(p), p * v.powf(p - 1.0), p * (p - 1.0) * v.powf(p - 2.0))
    }

    pub fn exp(&self) -> Jet {
        let e = self.value.exp();
        self.compose(e, e, e)
    }

    pub fn ln(&self) -> Jet {
        let v = self.value;
        self.compose(v.ln(), 1.0 / v, -1.0 / (v * v))
    }

    pub fn sin(&self) -> Jet {
        let (s, c) = self.value.sin_cos();
        self.compose(s, c, -s)
    }

    pub fn cos(&self) -> Jet {
        let (s, c) = self.value.sin_cos();
        self.compose(c, -s, -c)
    }

    /// Sum of jets; empty input gives the zero constant.
    pub fn sum<I: IntoIterator<Item = Jet>>(items: I) -> Jet {
        items.into_iter().fold(Jet::zero(), |acc, x| acc + x)
    }

    /// `Σ a_i b_i`.
    pub fn dot(a: &[Jet], b: &[Jet]) -> Jet {
        a.iter().zip(b).fold(Jet::zero(), |acc, (&x, &y)| acc + x * y)
    }

    fn merged(a: &Jet, b: &Jet) -> (u8, u8) {
        (a.dim.max(b.dim), a.order.min(b.order))
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        f.debug_struct("Jet")
            .field("value", &self.value)
            .field("grad", &&self.grad[..d])
            .field("order", &self.order)
            .finish()
    }
}

impl From<f64> for Jet {
    fn from(v: f64) -> Self {
        Jet::constant(v)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(mut self) -> Jet {
        let d = self.dim();
        self.value = -self.value;
        for i in 0..d {
            self.grad[i] = -self.grad[i];
            for j in 0..d {
                self.hess[i][j] = -self.hess[i][j];
            }
        }
        self
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let (dim, order) = Jet::merged(&self, &rhs);
        let d = dim as usize;
        let mut out = self;
        out.dim = dim;
        out.order = order;
        out.value += rhs.value;
        for i in 0..d {
            out.grad[i] += rhs.grad[i];
            for j in 0..d {
                out.hess[i][j] += rhs.hess[i][j];
            }
        }
        out
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self + (-rhs)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let (dim, order) = Jet::merged(&self, &rhs);
        let d = dim as usize;
        let (a, b) = (self.value, rhs.value);
        let mut out = Jet::constant(a * b);
        out.dim = dim;
        out.order = order;
        for i in 0..d {
            out.grad[i] = a * rhs.grad[i] + b * self.grad[i];
        }
        for i in 0..d {
            for j in i..d {
                let h = a * rhs.hess[i][j]
                    + b * self.hess[i][j]
                    + self.grad[i] * rhs.grad[j]
                    + rhs.grad[i] * self.grad[j];
                out.hess[i][j] = h;
                out.hess[j][i] = h;
            }
        }
        out
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.recip()
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.value += rhs;
        self
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(mut self, rhs: f64) -> Jet {
        self.value -= rhs;
        self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(mut self, rhs: f64) -> Jet {
        let d = self.dim();
        self.value *= rhs;
        for i in 0..d {
            self.grad[i] *= rhs;
            for j in 0..d {
                self.hess[i][j] *= rhs;
            }
        }
        self
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    fn div(self, rhs: f64) -> Jet {
        self * (1.0 / rhs)
    }
}

impl Add<Jet> for f64 {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        rhs + self
    }
}

impl Sub<Jet> for f64 {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        (-rhs) + self
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs * self
    }
}

impl Div<Jet> for f64 {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Jet) -> Jet {
        rhs.recip() * self
    }
}

impl AddAssign for Jet {
    fn add_assign(&mut self, rhs: Jet) {
        *self = *self + rhs;
    }
}

impl SubAssign for Jet {
    fn sub_assign(&mut self, rhs: Jet) {
        *self = *self - rhs;
    }
}

impl MulAssign<f64> for Jet {
    fn mul_assign(&mut self, rhs: f64) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd_grad(f: &dyn Fn(&[f64]) -> f64, p: &[f64], step: f64) -> Vec<f64> {
        (0..p.len())
            .map(|i| {
                let mut a = p.to_vec();
                let mut b = p.to_vec();
                a[i] += step;
                b[i] -= step;
                (f(&a) - f(&b)) / (2.0 * step)
            })
            .collect()
    }

    fn fd_hess(f: &dyn Fn(&[f64]) -> f64, p: &[f64], step: f64) -> Vec<Vec<f64>> {
        let n = p.len();
        let mut h = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let eval = |si: f64, sj: f64| {
                    let mut q = p.to_vec();
                    q[i] += si;
                    q[j] += sj;
                    f(&q)
                };
                h[i][j] = (eval(step, step) - eval(step, -step) - eval(-step, step)
                    + eval(-step, -step))
                    / (4.0 * step * step);
            }
        }
        h
    }

    #[test]
    fn product_rule_matches_analytic() {
        // f = x^2 y, grad = (2xy, x^2), hess = [[2y, 2x],[2x, 0]]
        let v = Jet::seed(&[1.5, -0.5]);
        let f = v[0] * v[0] * v[1];
        assert!((f.value() - (-1.125)).abs() < 1e-15);
        assert!((f.grad(0) - (-1.5)).abs() < 1e-15);
        assert!((f.grad(1) - 2.25).abs() < 1e-15);
        assert!((f.hess(0, 0) - (-1.0)).abs() < 1e-15);
        assert!((f.hess(0, 1) - 3.0).abs() < 1e-15);
        assert!(f.hess(1, 1).abs() < 1e-15);
    }

    #[test]
    fn rational_composite_matches_finite_differences() {
        let p = [0.3, -0.2, 0.7];
        let scalar = |x: &[f64]| {
            let s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
            (4.0 / ((1.0 + s) * (1.0 + s)) + x[0] * x[2]).sqrt() / (2.0 + x[1]).powi(3)
        };
        let v = Jet::seed(&p);
        let s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        let j = (4.0 / ((1.0 + s) * (1.0 + s)) + v[0] * v[2]).sqrt() / (v[1] + 2.0).powi(3);
        let g = fd_grad(&scalar, &p, 1e-5);
        let h = fd_hess(&scalar, &p, 1e-4);
        for i in 0..3 {
            assert!((j.grad(i) - g[i]).abs() <= 1e-5 * (1.0 + g[i].abs()));
            for k in 0..3 {
                assert!((j.hess(i, k) - h[i][k]).abs() <= 1e-5 * (1.0 + h[i][k].abs()));
                assert_eq!(j.hess(i, k), j.hess(k, i));
            }
        }
    }

    #[test]
    fn partial_lowers_order() {
        let v = Jet::seed(&[0.4, 0.1]);
        let f = v[0].sin() * v[1].exp();
        let fx = f.partial(0);
        assert_eq!(fx.order(), 1);
        assert!((fx.value() - 0.4f64.cos() * 0.1f64.exp()).abs() < 1e-15);
        assert!((fx.grad(1) - 0.4f64.cos() * 0.1f64.exp()).abs() < 1e-15);
        assert!((fx.grad(0) + 0.4f64.sin() * 0.1f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn constants_mix_with_any_dimension() {
        let v = Jet::seed(&[2.0, 3.0, 5.0]);
        let f = 2.0 + v[2] * Jet::constant(3.0);
        assert_eq!(f.dim(), 3);
        assert_eq!(f.order(), 2);
        assert_eq!(f.grad(2), 3.0);
    }
}
