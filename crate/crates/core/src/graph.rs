//! Simple undirected graphs and the cycle-star family.
//!
//! A [`Graph`] is a set of vertices `0..n` plus a list of undirected edges.
//! Edges are stored with endpoints ordered `u < v` and keep the order in
//! which they were supplied, so a weight profile computed later lines up
//! with the input edge list.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for {num_vertices} vertices")]
    IndexOutOfRange { index: usize, num_vertices: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("cycle length {0} too short: a cycle needs at least 3 vertices")]
    CycleTooShort(usize),
}

/// An undirected simple graph on vertices `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `u < v`.
    ///
    /// Rejects self-loops, out-of-range endpoints, and duplicate edges
    /// (`(u, v)` and `(v, u)` count as the same edge).
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if num_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for &x in &[a, b] {
                if x >= num_vertices {
                    return Err(GraphError::IndexOutOfRange {
                        index: x,
                        num_vertices,
                    });
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        Ok(Graph {
            num_vertices,
            edges: normalized,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in input order, each with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// A copy of this graph with the edge list sorted lexicographically.
    pub fn normalized(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph {
            num_vertices: self.num_vertices,
            edges,
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Maximum vertex degree; 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Neighbor lists indexed by vertex, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// True when every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.num_vertices];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.num_vertices
    }
}

/// Parameters of a cycle-star graph: a cycle of length `cycle_len` with
/// `leaf_count` pendant leaves attached to one cycle vertex (the hub).
///
/// The built graph uses a fixed vertex numbering:
///
/// * `0` — the hub,
/// * `1..=leaf_count` — the leaves,
/// * the remaining `cycle_len - 1` vertices — the rest of the cycle, in
///   cyclic order starting and ending at the hub.
///
/// Edges are emitted in lexicographic order, so two builds of the same
/// parameters are identical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStarSpec {
    cycle_len: usize,
    leaf_count: usize,
}

impl CycleStarSpec {
    pub fn new(cycle_len: usize, leaf_count: usize) -> Result<Self, GraphError> {
        if cycle_len < 3 {
            return Err(GraphError::CycleTooShort(cycle_len));
        }
        Ok(CycleStarSpec {
            cycle_len,
            leaf_count,
        })
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle_len
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    /// Number of vertices (and also of edges): `cycle_len + leaf_count`.
    pub fn order(&self) -> usize {
        self.cycle_len + self.leaf_count
    }

    /// The hub vertex, always 0.
    pub fn hub(&self) -> usize {
        0
    }

    /// Leaf vertex indices, `1..=leaf_count`.
    pub fn leaves(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.leaf_count
    }

    /// Non-hub cycle vertices in cyclic order away from the hub.
    pub fn cycle_path(&self) -> std::ops::RangeInclusive<usize> {
        self.leaf_count + 1..=self.order() - 1
    }

    pub fn build(&self) -> Graph {
        let l = self.leaf_count;
        let n = self.order();
        let mut edges = Vec::with_capacity(n);
        // Hub edges first: leaves, then both cycle neighbors of the hub.
        for leaf in 1..=l {
            edges.push((0, leaf));
        }
        edges.push((0, l + 1));
        edges.push((0, n - 1));
        // Path along the rest of the cycle.
        for v in l + 1..n - 1 {
            edges.push((v, v + 1));
        }
        Graph::new(n, edges).expect("cycle-star edges are always valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::IndexOutOfRange {
                index: 2,
                num_vertices: 2
            })
        );
        // (1, 0) normalizes to (0, 1), so this is a duplicate.
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(CycleStarSpec::new(2, 5), Err(GraphError::CycleTooShort(2)));
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.max_degree(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn triangle_with_one_leaf() {
        let g = CycleStarSpec::new(3, 1).unwrap().build();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (2, 3)]);
        assert_eq!(g.degrees(), vec![3, 1, 2, 2]);
    }

    #[test]
    fn hub_collects_all_leaves() {
        let g = CycleStarSpec::new(3, 4).unwrap().build();
        assert_eq!(g.num_vertices(), 7);
        assert_eq!(g.num_edges(), 7);
        assert_eq!(g.degrees()[0], 6);
        assert!(g.is_connected());
    }

    #[test]
    fn five_cycle_two_leaves() {
        let g = CycleStarSpec::new(5, 2).unwrap().build();
        assert_eq!(g.num_vertices(), 7);
        assert_eq!(g.num_edges(), 7);
        assert_eq!(g.degrees()[0], 4);
        assert_eq!(
            g.edges(),
            &[(0, 1), (0, 2), (0, 3), (0, 6), (3, 4), (4, 5), (5, 6)]
        );
    }

    #[test]
    fn pure_cycle_has_no_leaves() {
        let g = CycleStarSpec::new(5, 0).unwrap().build();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(g.num_edges(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn max_degree_matches_hub() {
        assert_eq!(CycleStarSpec::new(3, 1).unwrap().build().max_degree(), 3);
        assert_eq!(CycleStarSpec::new(7, 4).unwrap().build().max_degree(), 6);
    }

    #[test]
    fn edges_come_out_sorted() {
        for (k, l) in [(3, 0), (3, 5), (4, 1), (6, 3), (7, 4)] {
            let g = CycleStarSpec::new(k, l).unwrap().build();
            let mut sorted = g.edges().to_vec();
            sorted.sort_unstable();
            assert_eq!(g.edges(), &sorted[..], "cycle-star ({k}, {l})");
        }
    }

    #[test]
    fn disconnected_detected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }
}
