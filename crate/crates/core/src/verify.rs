//! Checking labelings and the lower bound on the achievable span.
//!
//! The weight of an edge `uv` under a labeling `phi` is
//! `phi(u) + phi(v)`. A labeling is *edge irregular* when all edge
//! weights are pairwise distinct; the *edge irregularity strength*
//! `es(G)` is the smallest span any edge irregular labeling of `G`
//! attains.
//!
//! Two counting facts bound `es(G)` from below for every graph with at
//! least one edge:
//!
//! * with labels in `1..=k` all weights land in `2..=2k`, which is only
//!   `2k - 1` distinct values, so `m` distinct weights force
//!   `k >= ceil((m + 1) / 2)`;
//! * the edges at a vertex `v` of degree `d` have weights
//!   `phi(v) + phi(u)` over its `d` neighbors `u`, so distinct weights
//!   need `d` pairwise distinct neighbor labels in `1..=k`, forcing
//!   `k >= d`.
//!
//! [`lower_bound`] returns the larger of the two.

use crate::graph::Graph;
use crate::labeling::VertexLabeling;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("labeling covers {labels} vertices but the graph has {vertices}")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("graph has no edges")]
    NoEdges,
}

/// Edge weights in the graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    weights: Vec<u64>,
}

impl WeightProfile {
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// The outcome of checking a labeling for edge irregularity.
///
/// `first_collision` holds the lexicographically first pair of edge
/// indices (into the graph's edge order) that share a weight, when any do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub irregular: bool,
    pub first_collision: Option<(usize, usize)>,
}

pub fn edge_weights(g: &Graph, phi: &VertexLabeling) -> Result<WeightProfile, VerifyError> {
    if phi.len() != g.num_vertices() {
        return Err(VerifyError::LengthMismatch {
            labels: phi.len(),
            vertices: g.num_vertices(),
        });
    }
    let weights = g
        .edges()
        .iter()
        .map(|&(u, v)| phi.get(u) + phi.get(v))
        .collect();
    Ok(WeightProfile { weights })
}

pub fn is_edge_irregular(g: &Graph, phi: &VertexLabeling) -> Result<Verdict, VerifyError> {
    let profile = edge_weights(g, phi)?;
    let mut first_seen: HashMap<u64, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (i, &w) in profile.weights().iter().enumerate() {
        match first_seen.entry(w) {
            std::collections::hash_map::Entry::Occupied(e) => {
                let pair = (*e.get(), i);
                // Lexicographic order on (first index, second index).
                if best.is_none_or(|b| pair < b) {
                    best = Some(pair);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(i);
            }
        }
    }
    Ok(Verdict {
        irregular: best.is_none(),
        first_collision: best,
    })
}

/// `max(ceil((m + 1) / 2), max_degree)` — no edge irregular labeling of a
/// graph with `m >= 1` edges can have a smaller span.
pub fn lower_bound(g: &Graph) -> Result<u64, VerifyError> {
    let m = g.num_edges();
    if m == 0 {
        return Err(VerifyError::NoEdges);
    }
    let pigeonhole = (m as u64 + 2) / 2; // == ceil((m + 1) / 2)
    Ok(pigeonhole.max(g.max_degree() as u64))
}
