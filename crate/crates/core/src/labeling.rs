//! Vertex labelings: one positive integer per vertex.

use thiserror::Error;

/// Labels are capped so that the sum of any two still fits in a `u64`.
pub const MAX_LABEL: u64 = u64::MAX / 2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling must cover at least one vertex")]
    Empty,
    #[error("label at vertex {0} must be a positive integer")]
    ZeroLabel(usize),
    #[error("label at vertex {0} exceeds the supported maximum")]
    LabelTooLarge(usize),
}

/// An assignment of a positive integer label to each vertex `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<u64>,
}

impl VertexLabeling {
    pub fn new(labels: Vec<u64>) -> Result<Self, LabelingError> {
        if labels.is_empty() {
            return Err(LabelingError::Empty);
        }
        for (v, &label) in labels.iter().enumerate() {
            if label == 0 {
                return Err(LabelingError::ZeroLabel(v));
            }
            if label > MAX_LABEL {
                return Err(LabelingError::LabelTooLarge(v));
            }
        }
        Ok(VertexLabeling { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label of vertex `v`.
    pub fn get(&self, v: usize) -> u64 {
        self.labels[v]
    }

    /// The largest label used. A labeling with span `k` is a `k`-labeling.
    pub fn span(&self) -> u64 {
        *self.labels.iter().max().expect("labeling is never empty")
    }
}
