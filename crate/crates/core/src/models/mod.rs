//! The model corpus: concrete charts with weak almost contact metric structures.

mod blair;
pub mod octonion;
mod sphere;

use serde::Serialize;

use crate::error::SuiteError;
use crate::structure::{Hypothesis, Profile, WeakStructure};

pub use blair::{build_sasakian_r2n1, build_weak_deformation};
pub use sphere::{build_nearly_sasakian_s5, build_sasakian_sphere, inverse_stereographic};

impl Profile {
    pub const SASAKIAN: Profile =
        Profile { h_zero: true, sasakian: true, nearly_sasakian: true, weak_contact: true };
}

/// A registered model: a structure plus the profile it is expected to show.
#[derive(Clone, Debug)]
pub struct ModelEntry {
    structure: WeakStructure,
    profile: Profile,
    description: &'static str,
}

/// Serializable summary of a model for listings.
#[derive(Clone, Debug, Serialize)]
pub struct ModelSummary {
    pub name: String,
    pub dim: usize,
    pub declared: Vec<&'static str>,
    pub profile: Profile,
    pub description: &'static str,
}

impl ModelEntry {
    pub fn new(structure: WeakStructure, profile: Profile, description: &'static str) -> Self {
        Self { structure, profile, description }
    }

    pub fn name(&self) -> &str {
        self.structure.name()
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn structure(&self) -> &WeakStructure {
        &self.structure
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn declares(&self, h: Hypothesis) -> bool {
        self.structure.declares(h)
    }

    pub fn summary(&self) -> ModelSummary {
        ModelSummary {
            name: self.name().to_string(),
            dim: self.dim(),
            declared: self.structure.declared().iter().map(|h| h.label()).collect(),
            profile: self.profile,
            description: self.description,
        }
    }
}

/// Names of the registered models, in registry order.
pub const MODEL_NAMES: [&str; 7] =
    ["nsas-s5", "sas-r5", "sas-r7", "sas-s5", "sas-s7", "weak-r5-a1.5", "weak-r5-a2"];

/// Builds a model by registry name. Besides the fixed names, any
/// `weak-r5-a<val>` with `val > 0` is accepted.
pub fn model(name: &str) -> Result<ModelEntry, SuiteError> {
    let built = match name {
        "sas-r5" => build_sasakian_r2n1(2),
        "sas-r7" => build_sasakian_r2n1(3),
        "sas-s5" => build_sasakian_sphere(2),
        "sas-s7" => build_sasakian_sphere(3),
        "nsas-s5" => build_nearly_sasakian_s5(),
        other => {
            let a: f64 = other
                .strip_prefix("weak-r5-a")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| SuiteError::UnknownModel(other.to_string()))?;
            build_weak_deformation(&build_sasakian_r2n1(2)?, a)
        }
    };
    Ok(built?)
}

/// All registered models.
pub fn registry() -> Vec<ModelEntry> {
    MODEL_NAMES.iter().map(|n| model(n).expect("registered model builds")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_round_trip() {
        for (entry, name) in registry().iter().zip(MODEL_NAMES) {
            assert_eq!(entry.name(), name);
        }
        assert!(matches!(model("sas-r9x"), Err(SuiteError::UnknownModel(_))));
        assert!(model("weak-r5-a-1").is_err());
        assert!(model("weak-r5-a0").is_err());
    }
}
