//! The identity catalog and the machinery to evaluate it on sampled points.

mod catalog;
mod gates;
mod suite;
mod wedge;

use nalgebra::DVector;
use serde::Serialize;

use crate::error::SuiteError;
use crate::structure::{rel_scalar, Hypothesis, StructurePoint, WeakStructure};

pub use catalog::catalog;
pub use gates::{theorem_t01_gate, theorem_th45_gate, GateReport, GateVerdict};
pub use suite::{
    evaluate_identity, float_json, multilinearity_defect, run_suite, verify_hypotheses, RunConfig, SuiteRow,
    SuiteReport, HYPOTHESIS_FLOOR,
};
pub use wedge::{contact_volume, wedge_injectivity, wedge_kernel_dimension};

/// One side of an identity at a sample.
#[derive(Clone, Debug)]
pub enum Val {
    S(f64),
    V(DVector<f64>),
}

/// Left and right side of one equality.
pub type Pair = (Val, Val);

/// Evaluates the sides of every equality in an identity on a tuple of tangent
/// vectors at a point.
pub type Evaluator = fn(&StructurePoint, &[DVector<f64>]) -> Vec<Pair>;

/// Role of a row within the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// Structure axioms and defining conditions.
    Structure,
    /// Stated lemmas, propositions and theorem conclusions.
    Statement,
    /// Intermediate steps of a derivation, checked at a looser tolerance.
    ProofChain,
}

/// A catalogued identity.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub hypothesis: Hypothesis,
    pub arity: usize,
    /// The printed statement differentiates a product of tensor fields; it is
    /// evaluated with the covariant derivative of that product.
    pub needs_fields: bool,
    pub kind: RowKind,
    /// The identity as printed.
    pub anchor: &'static str,
    /// Reading used where the printed identity is not literally checkable.
    pub erratum: Option<&'static str>,
    #[serde(skip)]
    pub eval: Evaluator,
}

impl IdentityRecord {
    /// Factor applied to the run tolerance for this row.
    pub fn tolerance_factor(&self) -> f64 {
        match self.kind {
            RowKind::ProofChain => 100.0,
            _ => 1.0,
        }
    }

    /// Largest relative residual over the equalities of this identity.
    pub fn residual(&self, sp: &StructurePoint, args: &[DVector<f64>]) -> f64 {
        (self.eval)(sp, args).iter().map(|p| pair_residual(sp, p)).fold(0.0, nan_max)
    }
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

pub(crate) fn pair_residual(sp: &StructurePoint, p: &Pair) -> f64 {
    match p {
        (Val::S(l), Val::S(r)) => rel_scalar(*l, *r),
        (Val::V(l), Val::V(r)) => sp.rel(l, r),
        _ => f64::NAN,
    }
}

/// Looks up a record by id.
pub fn identity(id: &str) -> Result<&'static IdentityRecord, SuiteError> {
    catalog().iter().find(|r| r.id == id).ok_or_else(|| SuiteError::UnknownIdentity(id.to_string()))
}

/// Resolves a comma-separated selection of ids; `all` selects the catalog.
pub fn select(spec: &str) -> Result<Vec<&'static IdentityRecord>, SuiteError> {
    if spec.trim() == "all" {
        return Ok(catalog().iter().collect());
    }
    spec.split(',').map(str::trim).filter(|s| !s.is_empty()).map(identity).collect()
}

/// Whether the structure declares everything `rec` needs.
pub fn declared_for(s: &WeakStructure, rec: &IdentityRecord) -> bool {
    rec.hypothesis.implied().iter().all(|&h| s.declares(h))
}
