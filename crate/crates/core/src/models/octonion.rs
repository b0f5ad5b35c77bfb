//! The cross product on `R^7` from imaginary octonion multiplication.

use std::ops::{Add, Mul, Neg};

use crate::kernel::Jet;

/// Oriented triples `(i, j, k)` with `e_i × e_j = e_k` (0-based), i.e. the
/// lines `(i, i+1, i+3) mod 7` of the Fano plane.
pub const FANO_TRIPLES: [(usize, usize, usize); 7] =
    [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)];

/// `e_a × e_b = sign · e_c`, or `None` when `a == b`.
pub fn unit_product(a: usize, b: usize) -> Option<(f64, usize)> {
    for &(i, j, k) in &FANO_TRIPLES {
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            if (a, b) == (x, y) {
                return Some((1.0, z));
            }
            if (a, b) == (y, x) {
                return Some((-1.0, z));
            }
        }
    }
    None
}

fn cross_generic<T>(a: &[T], b: &[T], zero: T) -> Vec<T>
where
    T: Copy + Add<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    assert!(a.len() == 7 && b.len() == 7, "cross product lives on R^7");
    let mut out = vec![zero; 7];
    for &(i, j, k) in &FANO_TRIPLES {
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            out[z] = out[z] + a[x] * b[y] + -(a[y] * b[x]);
        }
    }
    out
}

/// `a × b` for jet-valued vectors.
pub fn cross(a: &[Jet], b: &[Jet]) -> Vec<Jet> {
    cross_generic(a, b, Jet::zero())
}

/// `a × b` for plain vectors.
pub fn cross_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    cross_generic(a, b, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_vector, rng_for};

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn table_is_complete_and_antisymmetric() {
        for a in 0..7 {
            assert!(unit_product(a, a).is_none());
            for b in (0..7).filter(|&b| b != a) {
                let (s, c) = unit_product(a, b).unwrap();
                let (t, c2) = unit_product(b, a).unwrap();
                assert_eq!(c, c2);
                assert_eq!(s, -t);
                assert!(c != a && c != b);
            }
        }
    }

    #[test]
    fn matches_brute_force_table_and_norm_identity() {
        for i in 0..20 {
            let mut rng = rng_for(5, "cross", i);
            let x = random_vector(&mut rng, 7);
            let y = random_vector(&mut rng, 7);
            let fast = cross_f64(x.as_slice(), y.as_slice());
            let mut slow = [0.0; 7];
            for a in 0..7 {
                for b in 0..7 {
                    if let Some((s, c)) = unit_product(a, b) {
                        slow[c] += s * x[a] * y[b];
                    }
                }
            }
            for k in 0..7 {
                assert!((fast[k] - slow[k]).abs() < 1e-14);
            }
            let n2 = dot(&fast, &fast);
            let expected = dot(x.as_slice(), x.as_slice()) * dot(y.as_slice(), y.as_slice())
                - dot(x.as_slice(), y.as_slice()).powi(2);
            assert!((n2 - expected).abs() < 1e-12 * (1.0 + expected));
            assert!(dot(&fast, x.as_slice()).abs() < 1e-13);
        }
    }
}
