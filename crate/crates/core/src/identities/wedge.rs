//! Injectivity of `β ↦ dη ∧ β` on 2-forms.

use nalgebra::DMatrix;

use crate::error::SuiteError;
use crate::kernel::forms::wedge;
use crate::kernel::tensor::{Slot, Tensor};
use crate::structure::{StructurePoint, WeakStructure};

/// Relative singular-value threshold for the numerical kernel.
const KERNEL_RTOL: f64 = 1e-10;
/// Below this `|η ∧ (dη)^n|` the form is treated as non-contact.
const CONTACT_TOL: f64 = 1e-12;

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `|η ∧ (dη)^n|` up to a dimension-dependent constant, via the Pfaffian
/// identity `det [[dη, η], [−ηᵀ, 0]] = Pf² ∝ (η ∧ (dη)^n)²`.
pub fn contact_volume(sp: &StructurePoint) -> f64 {
    let d = sp.dim();
    let deta = sp.d_eta_form();
    let eta = sp.eta_covector();
    let m = DMatrix::from_fn(d + 1, d + 1, |i, j| match (i < d, j < d) {
        (true, true) => *deta.get(&[i, j]),
        (true, false) => eta[i],
        (false, true) => -eta[j],
        (false, false) => 0.0,
    });
    m.determinant().abs().sqrt()
}

/// Kernel dimension of `β ↦ ω ∧ β` from 2-forms to 4-forms, for a 2-form `ω`.
pub fn wedge_kernel_dimension(omega: &Tensor<f64>) -> Result<usize, SuiteError> {
    let d = omega.dim();
    let pairs = combinations(d, 2);
    let quads = combinations(d, 4);
    if quads.is_empty() {
        return Ok(pairs.len());
    }
    let mut m = DMatrix::zeros(quads.len(), pairs.len());
    for (c, p) in pairs.iter().enumerate() {
        let mut beta = Tensor::filled(d, vec![Slot::Down; 2], 0.0);
        beta.set(&[p[0], p[1]], 1.0);
        beta.set(&[p[1], p[0]], -1.0);
        let w = wedge(omega, &beta)?;
        for (r, q) in quads.iter().enumerate() {
            m[(r, c)] = *w.get(q);
        }
    }
    let sv = m.singular_values();
    let smax = sv.iter().copied().fold(0.0, f64::max);
    if smax == 0.0 {
        return Ok(pairs.len());
    }
    let rank = sv.iter().filter(|&&s| s >= KERNEL_RTOL * smax).count();
    Ok(pairs.len() - rank)
}

/// Kernel dimension of `Λ²T*_p → Λ⁴T*_p`, `β ↦ dη ∧ β`, after checking that
/// `η` is contact at `p`.
pub fn wedge_injectivity(s: &WeakStructure, p: &[f64]) -> Result<usize, SuiteError> {
    let sp = s.at(p)?;
    if contact_volume(&sp) < CONTACT_TOL {
        return Err(SuiteError::NotContact);
    }
    wedge_kernel_dimension(&sp.d_eta_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::forms::alt_product;
    use crate::kernel::jet::Jet;
    use crate::models::model;
    use crate::sampling::rng_for;
    use crate::structure::sample_structure_point;

    fn at(name: &str, i: u64) -> StructurePoint {
        let m = model(name).unwrap();
        sample_structure_point(m.structure(), &mut rng_for(2, "wedge-test", i)).unwrap()
    }

    #[test]
    fn counts_combinations() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(7, 4).len(), 35);
        assert!(combinations(3, 4).is_empty());
    }

    #[test]
    fn injective_exactly_above_dimension_five() {
        for name in ["sas-s7", "sas-r7"] {
            let sp = at(name, 0);
            assert_eq!(wedge_injectivity(model(name).unwrap().structure(), sp.point()).unwrap(), 0, "{name}");
        }
        for name in ["sas-r5", "sas-s5", "nsas-s5"] {
            let sp = at(name, 0);
            assert!(wedge_injectivity(model(name).unwrap().structure(), sp.point()).unwrap() >= 1, "{name}");
        }
    }

    #[test]
    fn zero_form_has_full_kernel() {
        for d in [3, 5, 7] {
            let zero = Tensor::filled(d, vec![Slot::Down; 2], 0.0);
            assert_eq!(wedge_kernel_dimension(&zero).unwrap(), d * (d - 1) / 2);
        }
    }

    // Pf² of the bordered matrix and (η ∧ dη ∧ dη)(e₁..e₅)² differ by a
    // constant that depends only on the dimension.
    #[test]
    fn contact_volume_is_proportional_to_the_top_form() {
        let ratios: Vec<f64> = ["sas-r5", "sas-s5", "nsas-s5"]
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let sp = at(name, i as u64);
                let deta = sp.d_eta_form();
                let top = alt_product(&sp.eta_form(), &wedge(&deta, &deta).unwrap()).unwrap();
                contact_volume(&sp) / top.get(&[0, 1, 2, 3, 4]).abs()
            })
            .collect();
        for r in &ratios[1..] {
            assert!((r / ratios[0] - 1.0).abs() < 1e-9, "{ratios:?}");
        }
    }

    #[test]
    fn closed_eta_is_rejected() {
        let base = model("sas-r5").unwrap().structure().clone();
        let s = base.map_fields(|_, mut f| {
            for (i, e) in f.eta.iter_mut().enumerate() {
                *e = Jet::constant(if i == 4 { 1.0 } else { 0.0 });
            }
            f
        });
        let p = [0.1, 0.2, -0.3, 0.4, 0.0];
        assert!(matches!(wedge_injectivity(&s, &p), Err(SuiteError::NotContact)));
    }
}
