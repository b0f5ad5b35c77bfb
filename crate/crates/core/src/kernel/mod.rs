//! Jets, tensors, Levi-Civita calculus and differential forms on a single chart.

pub mod connection;
pub mod forms;
pub mod jet;
pub mod manifold;
pub mod tensor;

pub use connection::{christoffel, covariant_derivative, riemann, second_covariant_derivative_11, Christoffel, LocalGeometry};
pub use forms::{exterior_derivative, exterior_derivative_covariant, wedge};
pub use jet::Jet;
pub use manifold::ChartManifold;
pub use tensor::{Slot, Tensor, TensorFieldComponents, Valence};
