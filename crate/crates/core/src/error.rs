use thiserror::Error;

/// Failures of the differential-geometry kernel.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("metric is singular or not positive definite at {point:?}")]
    SingularMetric { point: Vec<f64> },
    #[error("point {point:?} lies outside the chart domain of `{chart}`")]
    OutsideDomain { chart: String, point: Vec<f64> },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported valence for this operation: {0}")]
    UnsupportedValence(String),
    #[error("exterior derivative of a {0}-form is not supported")]
    UnsupportedFormDegree(usize),
    #[error("wedge product of degrees ({0}, {1}) is not supported")]
    UnsupportedWedge(usize, usize),
    #[error("eigenvalue crossing near {point:?}: spectral projector is not smooth (gap {gap:.3e})")]
    EigenvalueCrossing { point: Vec<f64>, gap: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Failures of the identity suite and its drivers.
#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{id}` takes {expected} vector arguments, got {got}")]
    ArityMismatch { id: String, expected: usize, got: usize },
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("injectivity claim inapplicable: η is not contact at the sampled point")]
    NotContact,
    #[error("could not draw a non-degenerate sample for `{0}`")]
    Degenerate(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
