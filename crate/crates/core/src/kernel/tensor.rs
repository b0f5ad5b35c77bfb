//! Dense component arrays for tensors at a point, and jet-valued tensor fields.

use std::fmt;
use std::sync::Arc;

use super::jet::Jet;
use crate::error::{GeometryError, Result};

/// Index position of a tensor slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Up,
    Down,
}

/// Valences handled by the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valence {
    Scalar,
    Vector,
    OneForm,
    Mixed11,
    Covariant2,
    Covariant3,
    Covariant4,
}

impl Valence {
    pub fn slots(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            Valence::Scalar => &[],
            Valence::Vector => &[Up],
            Valence::OneForm => &[Down],
            Valence::Mixed11 => &[Up, Down],
            Valence::Covariant2 => &[Down, Down],
            Valence::Covariant3 => &[Down, Down, Down],
            Valence::Covariant4 => &[Down, Down, Down, Down],
        }
    }

    pub fn rank(self) -> usize {
        self.slots().len()
    }
}

/// Components of a tensor in coordinates, row-major with slot 0 most significant.
#[derive(Clone, PartialEq)]
pub struct Tensor<T> {
    dim: usize,
    slots: Vec<Slot>,
    data: Vec<T>,
}

impl<T: Clone> Tensor<T> {
    pub fn from_vec(dim: usize, slots: Vec<Slot>, data: Vec<T>) -> Result<Self> {
        let expected = dim.pow(slots.len() as u32);
        if data.len() != expected {
            return Err(GeometryError::DimensionMismatch { expected, got: data.len() });
        }
        Ok(Self { dim, slots, data })
    }

    pub fn filled(dim: usize, slots: Vec<Slot>, value: T) -> Self {
        let n = dim.pow(slots.len() as u32);
        Self { dim, slots, data: vec![value; n] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Tensor<U> {
        Tensor { dim: self.dim, slots: self.slots.clone(), data: self.data.iter().map(f).collect() }
    }
}

impl Tensor<Jet> {
    pub fn values(&self) -> Tensor<f64> {
        self.map(|j| j.value())
    }
}

impl Tensor<f64> {
    /// Max absolute component.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

impl<T: fmt::Debug> fmt::Debug for Tensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tensor")
            .field("dim", &self.dim)
            .field("slots", &self.slots)
            .field("data", &self.data)
            .finish()
    }
}

/// Enumerates all multi-indices of the given rank in row-major order.
pub fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

pub type ComponentFn = Arc<dyn Fn(&[Jet]) -> Vec<Jet> + Send + Sync>;

/// A tensor field given by jet-valued component functions of the chart coordinates.
#[derive(Clone)]
pub struct TensorFieldComponents {
    valence: Valence,
    components: ComponentFn,
}

impl TensorFieldComponents {
    pub fn new(valence: Valence, f: impl Fn(&[Jet]) -> Vec<Jet> + Send + Sync + 'static) -> Self {
        Self { valence, components: Arc::new(f) }
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    /// Evaluates the components on seeded coordinate jets.
    pub fn eval(&self, coords: &[Jet]) -> Result<Tensor<Jet>> {
        let dim = coords.len();
        Tensor::from_vec(dim, self.valence.slots().to_vec(), (self.components)(coords))
    }

    /// The identity endomorphism field.
    pub fn identity(dim: usize) -> Self {
        Self::new(Valence::Mixed11, move |_| {
            let mut out = vec![Jet::zero(); dim * dim];
            for i in 0..dim {
                out[i * dim + i] = Jet::constant(1.0);
            }
            out
        })
    }
}

impl fmt::Debug for TensorFieldComponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TensorFieldComponents").field("valence", &self.valence).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_match_valence() {
        let t: Tensor<f64> = Tensor::filled(3, Valence::Covariant3.slots().to_vec(), 0.0);
        assert_eq!(t.data().len(), 27);
        assert!(Tensor::from_vec(3, vec![Slot::Up], vec![0.0; 4]).is_err());
    }

    #[test]
    fn multi_index_order_is_row_major() {
        let all: Vec<_> = multi_indices(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let t: Tensor<f64> = Tensor::filled(4, vec![Slot::Down; 3], 0.0);
        assert_eq!(t.offset(&[1, 2, 3]), 16 + 8 + 3);
    }
}
