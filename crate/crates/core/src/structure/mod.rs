//! Weak almost contact metric structures `(φ, Q, ξ, η, g)` and their derived
//! tensors.

mod point;
mod validate;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::kernel::{ChartManifold, Jet};

pub use point::StructurePoint;
pub use validate::{
    compute_h, delta, min_eigenvalue, nearly_sasakian_residual, sample_structure_point,
    sasakian_residuals, validate_structure, AxiomEntry, AxiomReport, DerivedTensors, AXIOM_TOL,
};

/// Jet-valued components of `φ`, `Q`, `ξ` and `η` in chart coordinates.
///
/// `phi[i][j]` is `φ^i_j`, the `i`-th component of `φ(∂_j)`; `q` likewise.
#[derive(Clone, Debug)]
pub struct StructureFields {
    pub phi: Vec<Vec<Jet>>,
    pub q: Vec<Vec<Jet>>,
    pub xi: Vec<Jet>,
    pub eta: Vec<Jet>,
}

pub type StructureFn = Arc<dyn Fn(&[Jet]) -> StructureFields + Send + Sync>;

/// Hypothesis classes a structure can be declared to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Hypothesis {
    /// Any Riemannian chart.
    HAny,
    /// Weak almost contact metric.
    H0,
    /// Weak nearly Sasakian.
    H1,
    /// H1 with `(∇_X Q̃)Y = 0` for `Y ∈ ker η`.
    H2a,
    /// H1 with `R_{Q̃X,Y}Z ∈ ker η` on `ker η`.
    H2b,
    /// H1 with both extra conditions.
    H3,
    /// Sasakian: `(∇_X φ)Y = g(X,Y)ξ − η(Y)X`.
    Sasakian,
    /// Weak contact metric: `dη(X,Y) = g(X, φY)`.
    WeakContact,
}

impl Hypothesis {
    pub fn label(self) -> &'static str {
        match self {
            Hypothesis::HAny => "HANY",
            Hypothesis::H0 => "H0",
            Hypothesis::H1 => "H1",
            Hypothesis::H2a => "H2a",
            Hypothesis::H2b => "H2b",
            Hypothesis::H3 => "H3",
            Hypothesis::Sasakian => "SAS",
            Hypothesis::WeakContact => "WC",
        }
    }

    /// Classes implied by this one (including itself).
    pub fn implied(self) -> &'static [Hypothesis] {
        use Hypothesis::*;
        match self {
            HAny => &[HAny],
            H0 => &[HAny, H0],
            H1 => &[HAny, H0, H1],
            H2a => &[HAny, H0, H1, H2a],
            H2b => &[HAny, H0, H1, H2b],
            H3 => &[HAny, H0, H1, H2a, H2b, H3],
            Sasakian => &[HAny, H0, Sasakian],
            WeakContact => &[HAny, H0, WeakContact],
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Qualitative profile a model is expected to show.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub h_zero: bool,
    pub sasakian: bool,
    pub nearly_sasakian: bool,
    pub weak_contact: bool,
}

/// A weak almost contact metric structure on a chart.
#[derive(Clone)]
pub struct WeakStructure {
    name: String,
    base: ChartManifold,
    fields: StructureFn,
    declared: Vec<Hypothesis>,
}

impl WeakStructure {
    pub fn new(
        name: impl Into<String>,
        base: ChartManifold,
        fields: impl Fn(&[Jet]) -> StructureFields + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), base, fields: Arc::new(fields), declared: vec![Hypothesis::H0] }
    }

    /// Declares the hypothesis classes the author claims; they are verified
    /// independently by sampling.
    pub fn declare(mut self, classes: &[Hypothesis]) -> Self {
        let mut all: Vec<Hypothesis> = classes.iter().flat_map(|c| c.implied()).copied().collect();
        all.sort();
        all.dedup();
        self.declared = all;
        self
    }

    pub fn with_base(mut self, base: ChartManifold) -> Self {
        assert_eq!(base.dim(), self.base.dim());
        self.base = base;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Post-composes the structure fields with `f` (used to inject faults).
    pub fn map_fields(
        mut self,
        f: impl Fn(&[Jet], StructureFields) -> StructureFields + Send + Sync + 'static,
    ) -> Self {
        let inner = self.fields.clone();
        self.fields = Arc::new(move |x| f(x, inner(x)));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &ChartManifold {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn declared(&self) -> &[Hypothesis] {
        &self.declared
    }

    pub fn declares(&self, h: Hypothesis) -> bool {
        self.declared.contains(&h)
    }

    pub fn fields_on(&self, coords: &[Jet]) -> StructureFields {
        (self.fields)(coords)
    }

    /// Evaluates everything derived from the structure at `p`.
    pub fn at(&self, p: &[f64]) -> crate::Result<StructurePoint> {
        StructurePoint::new(self, p)
    }
}

impl fmt::Debug for WeakStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeakStructure")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("declared", &self.declared)
            .finish()
    }
}

/// Relative residual `‖L − R‖ / (1 + ‖L‖ + ‖R‖)` for scalars.
pub fn rel_scalar(l: f64, r: f64) -> f64 {
    (l - r).abs() / (1.0 + l.abs() + r.abs())
}
