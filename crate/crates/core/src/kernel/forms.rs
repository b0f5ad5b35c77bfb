//! Differential forms stored as fully antisymmetric covariant arrays.
//!
//! Normalisation follows the alternation convention: `α∧β = Alt(α⊗β)` and
//! `dω = Alt(∇ω)`, so `dη(X,Y) = ½{Xη(Y) − Yη(X) − η([X,Y])}` and
//! `3(η∧β)(X,Y,Z) = η(X)β(Y,Z) + η(Y)β(Z,X) + η(Z)β(X,Y)`.

use super::connection::LocalGeometry;
use super::jet::Jet;
use super::manifold::ChartManifold;
use super::tensor::{multi_indices, Slot, Tensor, TensorFieldComponents};
use crate::error::{GeometryError, Result};

/// Sign of a permutation given as a slice of distinct indices.
pub fn permutation_sign(perm: &[usize]) -> f64 {
    let mut sign = 1.0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn form_degree<T: Clone>(t: &Tensor<T>) -> Result<usize> {
    if t.slots().contains(&Slot::Up) {
        return Err(GeometryError::UnsupportedValence("form with a contravariant slot".into()));
    }
    Ok(t.rank())
}

/// `dω` of a jet-valued k-form from coordinate partials:
/// `(dω)_{i0..ik} = (1/(k+1)) Σ_j (−1)^j ∂_{ij} ω_{i0..îj..ik}`.
pub fn exterior_derivative_jets(omega: &Tensor<Jet>) -> Result<Tensor<Jet>> {
    let k = form_degree(omega)?;
    let d = omega.dim();
    let mut out = Tensor::filled(d, vec![Slot::Down; k + 1], Jet::zero());
    for idx in multi_indices(d, k + 1) {
        let mut acc = Jet::zero();
        for j in 0..=k {
            let rest: Vec<usize> =
                idx.iter().enumerate().filter(|&(s, _)| s != j).map(|(_, &v)| v).collect();
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += omega.get(&rest).partial(idx[j]) * sign;
        }
        out.set(&idx, acc / (k as f64 + 1.0));
    }
    Ok(out)
}

/// `dω` from the covariant derivative: `(1/(k+1)) Σ_j (−1)^j (∇_{ij} ω)(…)`.
pub fn exterior_derivative_from_nabla(geo: &LocalGeometry, omega: &Tensor<Jet>) -> Result<Tensor<f64>> {
    let k = form_degree(omega)?;
    let d = omega.dim();
    let nabla = geo.nabla(omega).values();
    let mut out = Tensor::filled(d, vec![Slot::Down; k + 1], 0.0);
    for idx in multi_indices(d, k + 1) {
        let mut acc = 0.0;
        for j in 0..=k {
            let mut full = Vec::with_capacity(k + 1);
            full.push(idx[j]);
            full.extend(idx.iter().enumerate().filter(|&(s, _)| s != j).map(|(_, &v)| v));
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * nabla.get(&full);
        }
        out.set(&idx, acc / (k as f64 + 1.0));
    }
    Ok(out)
}

fn check_supported_degree(field: &TensorFieldComponents) -> Result<()> {
    let k = field.valence().rank();
    if field.valence().slots().contains(&Slot::Up) {
        return Err(GeometryError::UnsupportedValence(format!("{:?}", field.valence())));
    }
    if !(1..=2).contains(&k) {
        return Err(GeometryError::UnsupportedFormDegree(k));
    }
    Ok(())
}

/// Exterior derivative of a 1- or 2-form field at `p` (coordinate formula).
pub fn exterior_derivative(
    m: &ChartManifold,
    omega: &TensorFieldComponents,
    p: &[f64],
) -> Result<Tensor<f64>> {
    check_supported_degree(omega)?;
    m.check_point(p)?;
    let comps = omega.eval(&Jet::seed(p))?;
    Ok(exterior_derivative_jets(&comps)?.values())
}

/// Exterior derivative of a 1- or 2-form field at `p` via `∇`.
pub fn exterior_derivative_covariant(
    m: &ChartManifold,
    omega: &TensorFieldComponents,
    p: &[f64],
) -> Result<Tensor<f64>> {
    check_supported_degree(omega)?;
    let geo = LocalGeometry::at(m, p)?;
    let comps = omega.eval(&Jet::seed(p))?;
    exterior_derivative_from_nabla(&geo, &comps)
}

/// `Alt(α⊗β)` for forms of any degree, summed over shuffles.
pub fn alt_product(alpha: &Tensor<f64>, beta: &Tensor<f64>) -> Result<Tensor<f64>> {
    let k = form_degree(alpha)?;
    let m = form_degree(beta)?;
    let d = alpha.dim();
    if beta.dim() != d {
        return Err(GeometryError::DimensionMismatch { expected: d, got: beta.dim() });
    }
    let n = k + m;
    let coeff = factorial(k) * factorial(m) / factorial(n);
    let mut out = Tensor::filled(d, vec![Slot::Down; n], 0.0);
    // Subsets of positions {0..n} of size k, as bitmasks.
    let shuffles: Vec<(Vec<usize>, Vec<usize>, f64)> = (0u32..(1u32 << n))
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| {
            let first: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let second: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
            let perm: Vec<usize> = first.iter().chain(&second).copied().collect();
            (first, second, permutation_sign(&perm))
        })
        .collect();
    for idx in multi_indices(d, n) {
        let mut acc = 0.0;
        for (first, second, sign) in &shuffles {
            let a: Vec<usize> = first.iter().map(|&s| idx[s]).collect();
            let b: Vec<usize> = second.iter().map(|&s| idx[s]).collect();
            acc += sign * alpha.get(&a) * beta.get(&b);
        }
        out.set(&idx, coeff * acc);
    }
    Ok(out)
}

/// Wedge product for the degree pairs (1,1), (1,2), (2,1), (2,2), (1,3), (3,1).
pub fn wedge(alpha: &Tensor<f64>, beta: &Tensor<f64>) -> Result<Tensor<f64>> {
    let k = form_degree(alpha)?;
    let m = form_degree(beta)?;
    let supported = matches!((k.min(m), k.max(m)), (1, 1) | (1, 2) | (2, 2) | (1, 3));
    if !supported {
        return Err(GeometryError::UnsupportedWedge(k, m));
    }
    alt_product(alpha, beta)
}

/// Evaluates a k-form on k vectors.
pub fn eval_form(form: &Tensor<f64>, vectors: &[&nalgebra::DVector<f64>]) -> f64 {
    let k = form.rank();
    assert_eq!(vectors.len(), k);
    let d = form.dim();
    multi_indices(d, k)
        .map(|idx| {
            let w: f64 = idx.iter().zip(vectors).map(|(&i, v)| v[i]).product();
            if w == 0.0 {
                0.0
            } else {
                w * form.get(&idx)
            }
        })
        .sum()
}

/// Builds the 2-form `(X, Y) ↦ b(X, Y)` from a bilinear function's matrix
/// `B_ij = b(e_i, e_j)`, antisymmetrising.
pub fn two_form_from_matrix(d: usize, b: &nalgebra::DMatrix<f64>) -> Tensor<f64> {
    let mut out = Tensor::filled(d, vec![Slot::Down; 2], 0.0);
    for i in 0..d {
        for j in 0..d {
            out.set(&[i, j], 0.5 * (b[(i, j)] - b[(j, i)]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::tensor::Valence;
    use nalgebra::DVector;

    fn brute_force_wedge(alpha: &Tensor<f64>, beta: &Tensor<f64>) -> Tensor<f64> {
        // Alt(α⊗β) summed over every permutation of the k+m slots.
        let k = alpha.rank();
        let m = beta.rank();
        let n = k + m;
        let d = alpha.dim();
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(|i| !p.contains(i))
                        .map(|i| {
                            let mut q = p.clone();
                            q.push(i);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        let mut out = Tensor::filled(d, vec![Slot::Down; n], 0.0);
        for idx in multi_indices(d, n) {
            let mut acc = 0.0;
            for p in &perms {
                let a: Vec<usize> = p[..k].iter().map(|&s| idx[s]).collect();
                let b: Vec<usize> = p[k..].iter().map(|&s| idx[s]).collect();
                acc += permutation_sign(p) * alpha.get(&a) * beta.get(&b);
            }
            out.set(&idx, acc / factorial(n));
        }
        out
    }

    fn one_form(v: &[f64]) -> Tensor<f64> {
        Tensor::from_vec(v.len(), vec![Slot::Down], v.to_vec()).unwrap()
    }

    #[test]
    fn eta_wedge_eta_vanishes() {
        let eta = one_form(&[0.3, -1.2, 0.5, 0.0, 2.0]);
        assert!(wedge(&eta, &eta).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn cyclic_formula_for_one_two_wedge() {
        let d = 4;
        let eta = one_form(&[1.0, 0.0, 0.0, 0.0]);
        let b = nalgebra::DMatrix::from_fn(d, d, |i, j| (i as f64 + 1.0) * (j as f64 - 1.5));
        let beta = two_form_from_matrix(d, &b);
        let w = wedge(&eta, &beta).unwrap();
        let xi = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        let y = DVector::from_vec(vec![0.0, 1.0, 0.3, 0.0]);
        let z = DVector::from_vec(vec![0.0, -0.2, 0.0, 1.0]);
        let lhs = 3.0 * eval_form(&w, &[&xi, &y, &z]);
        assert!((lhs - eval_form(&beta, &[&y, &z])).abs() < 1e-14);
    }

    #[test]
    fn shuffle_sum_matches_permutation_sum() {
        let d = 5;
        let a = two_form_from_matrix(d, &nalgebra::DMatrix::from_fn(d, d, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0));
        let b = two_form_from_matrix(d, &nalgebra::DMatrix::from_fn(d, d, |i, j| (i as f64 - j as f64).sin()));
        let fast = wedge(&a, &b).unwrap();
        let slow = brute_force_wedge(&a, &b);
        for (x, y) in fast.data().iter().zip(slow.data()) {
            assert!((x - y).abs() < 1e-14);
        }
        // graded commutativity for (2,2)
        let ba = wedge(&b, &a).unwrap();
        for (x, y) in fast.data().iter().zip(ba.data()) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn unsupported_pairs_error() {
        let a = two_form_from_matrix(6, &nalgebra::DMatrix::identity(6, 6));
        let b = alt_product(&a, &a).unwrap();
        assert!(matches!(wedge(&a, &b), Err(GeometryError::UnsupportedWedge(2, 4))));
    }

    #[test]
    fn closed_forms_have_zero_derivative() {
        // ω = x1 dx0 + x0 dx1 = d(x0 x1)
        let m = ChartManifold::euclidean(3);
        let omega = TensorFieldComponents::new(Valence::OneForm, |x| vec![x[1], x[0], Jet::zero()]);
        let d = exterior_derivative(&m, &omega, &[0.3, 0.2, 0.1]).unwrap();
        assert!(d.max_abs() < 1e-15);
        let three = TensorFieldComponents::new(Valence::Covariant3, |_| vec![Jet::zero(); 27]);
        assert!(matches!(
            exterior_derivative(&m, &three, &[0.0, 0.0, 0.0]),
            Err(GeometryError::UnsupportedFormDegree(3))
        ));
    }
}
