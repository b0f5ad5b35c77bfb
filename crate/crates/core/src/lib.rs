//! Numerical verification of identities for weak almost contact metric
//! structures, nearly Sasakian structures in particular.

pub mod error;
pub mod identities;
pub mod kernel;
pub mod models;
pub mod sampling;
pub mod spectral;
pub mod structure;

pub use error::{GeometryError, Result, SuiteError};
