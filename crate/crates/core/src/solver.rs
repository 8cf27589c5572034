//! Exact computation of the edge irregularity strength.
//!
//! [`exact_es`] tries spans `k = lower_bound(g), lower_bound(g) + 1, ...`
//! and for each runs a backtracking search for an edge irregular
//! `k`-labeling. The search:
//!
//! * assigns vertices in decreasing-degree order (ties broken by BFS
//!   discovery order from the lowest-index vertex of maximum degree),
//!   so the most constrained vertices are pinned early;
//! * keeps a bitmap of edge weights already used and rejects a label
//!   the moment it repeats a weight, including between two edges
//!   created by the same assignment;
//! * breaks symmetry between *false twins* — vertices with identical
//!   neighbor sets are interchangeable, so their labels may be forced
//!   to be non-decreasing in assignment order without losing any
//!   solution.
//!
//! Every labeling has a distinct-sums witness (label vertex `i` with
//! `2^i`), so some span always works and the iteration terminates.
//! A [`SearchBudget`] caps nodes or wall time; when it runs out the
//! result is an honest [`EsOutcome::Unknown`] carrying the bounds
//! proved so far, never a guess.
//!
//! [`brute_force_es`] is the deliberately naive oracle used to
//! cross-check the solver on small graphs: it enumerates all `k^n`
//! labelings in lexicographic order with no pruning beyond stopping a
//! weight scan at the first collision.
//!
//! Node counts (label-assignment attempts) depend only on the graph
//! and the options, so runs are reproducible; elapsed time of course
//! is not.

use crate::graph::Graph;
use crate::labeling::VertexLabeling;
use crate::verify::{is_edge_irregular, lower_bound};
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph must be connected")]
    Disconnected,
    #[error("label bound must be at least 1")]
    ZeroLabelBound,
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    TooLargeForBruteForce { n: usize, cap: usize },
}

/// Limits on a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget {
        max_nodes: None,
        max_time: None,
    };
}

/// How a result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Backtracking,
    BruteForce,
    Construction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Backtracking => "backtracking",
            Method::BruteForce => "brute_force",
            Method::Construction => "construction",
        })
    }
}

/// Outcome of searching one span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Found(VertexLabeling),
    Infeasible,
    BudgetExhausted,
}

/// An exactly determined `es` value with its witness labeling.
#[derive(Debug, Clone)]
pub struct EsResult {
    pub es_value: u64,
    pub witness: VertexLabeling,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub method: Method,
}

/// Result of [`exact_es`]: either the exact value or the bounds proved
/// before the budget ran out.
#[derive(Debug, Clone)]
pub enum EsOutcome {
    Exact(EsResult),
    Unknown {
        /// Every span below this was proved infeasible.
        lower_bound: u64,
        /// Best known feasible span, when one is known.
        upper_bound: Option<u64>,
        nodes_explored: u64,
        elapsed: Duration,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    pub budget: SearchBudget,
    /// Disable to measure how much the false-twin symmetry breaking
    /// saves; the answer never changes, only the node count.
    pub twin_pruning: bool,
    /// Give up (as `Unknown`) instead of searching spans above this.
    pub max_span: Option<u64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: SearchBudget::UNLIMITED,
            twin_pruning: true,
            max_span: None,
        }
    }
}

/// Fixed per-graph data shared by the searches at every span.
struct SearchContext {
    /// Assignment order: position -> vertex.
    order: Vec<usize>,
    /// Position -> earlier positions holding a neighbor.
    earlier: Vec<Vec<usize>>,
    /// Position -> earlier position of the same false-twin class.
    twin_prev: Vec<Option<usize>>,
}

impl SearchContext {
    fn build(g: &Graph, twin_pruning: bool) -> SearchContext {
        let n = g.num_vertices();
        let adj = g.adjacency();
        let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let max_deg = *deg.iter().max().expect("graph has vertices");
        let root = deg.iter().position(|&d| d == max_deg).unwrap();

        let mut bfs_pos = vec![usize::MAX; n];
        bfs_pos[root] = 0;
        let mut next = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if bfs_pos[v] == usize::MAX {
                    bfs_pos[v] = next;
                    next += 1;
                    queue.push_back(v);
                }
            }
        }
        debug_assert_eq!(next, n, "context requires a connected graph");

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (Reverse(deg[v]), bfs_pos[v]));
        let mut pos_of = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }

        let earlier = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                let mut e: Vec<usize> = adj[v]
                    .iter()
                    .map(|&u| pos_of[u])
                    .filter(|&q| q < p)
                    .collect();
                e.sort_unstable();
                e
            })
            .collect();

        let mut twin_prev = vec![None; n];
        if twin_pruning {
            let mut last_of_class: HashMap<&[usize], usize> = HashMap::new();
            for (p, &v) in order.iter().enumerate() {
                let class = adj[v].as_slice();
                twin_prev[p] = last_of_class.get(class).copied();
                last_of_class.insert(class, p);
            }
        }

        SearchContext {
            order,
            earlier,
            twin_prev,
        }
    }

    /// Searches for an edge irregular labeling with span at most `k`.
    /// Returns the outcome plus the number of label assignments tried.
    fn search(&self, k: u64, node_cap: u64, deadline: Option<Instant>) -> (Feasibility, u64) {
        let n = self.order.len();
        let mut runner = Runner {
            ctx: self,
            k,
            labels: vec![0; n],
            used: vec![false; 2 * k as usize + 1],
            nodes: 0,
            node_cap,
            deadline,
        };
        if runner.out_of_time() {
            return (Feasibility::BudgetExhausted, 0);
        }
        let outcome = match runner.dive(0) {
            None => Feasibility::BudgetExhausted,
            Some(false) => Feasibility::Infeasible,
            Some(true) => {
                let mut by_vertex = vec![0u64; n];
                for (p, &v) in self.order.iter().enumerate() {
                    by_vertex[v] = runner.labels[p];
                }
                Feasibility::Found(
                    VertexLabeling::new(by_vertex).expect("search assigns labels in 1..=k"),
                )
            }
        };
        (outcome, runner.nodes)
    }
}

struct Runner<'c> {
    ctx: &'c SearchContext,
    k: u64,
    labels: Vec<u64>,
    /// Weight -> already used by an edge among assigned vertices.
    used: Vec<bool>,
    nodes: u64,
    node_cap: u64,
    deadline: Option<Instant>,
}

impl Runner<'_> {
    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// `Some(true)`: labeling completed. `Some(false)`: subtree
    /// exhausted. `None`: budget ran out mid-search.
    fn dive(&mut self, depth: usize) -> Option<bool> {
        if depth == self.labels.len() {
            return Some(true);
        }
        let first = match self.ctx.twin_prev[depth] {
            Some(p) => self.labels[p], // twins: labels non-decreasing
            None => 1,
        };
        for label in first..=self.k {
            self.nodes += 1;
            if self.nodes > self.node_cap {
                return None;
            }
            if self.nodes.is_multiple_of(64) && self.out_of_time() {
                return None;
            }

            // Claim the weights of all edges back to assigned vertices,
            // stopping at the first clash — including one between two of
            // the new edges themselves.
            let neighbors = &self.ctx.earlier[depth];
            let mut claimed = 0;
            for &q in neighbors {
                let w = (label + self.labels[q]) as usize;
                if self.used[w] {
                    break;
                }
                self.used[w] = true;
                claimed += 1;
            }
            if claimed == neighbors.len() {
                self.labels[depth] = label;
                match self.dive(depth + 1) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            for &q in &neighbors[..claimed] {
                self.used[(label + self.labels[q]) as usize] = false;
            }
        }
        Some(false)
    }
}

fn validate(g: &Graph) -> Result<(), SolverError> {
    if g.num_edges() == 0 {
        return Err(SolverError::NoEdges);
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

/// Searches for an edge irregular labeling of `g` with span at most `k`.
pub fn find_irregular_labeling(
    g: &Graph,
    k: u64,
    budget: &SearchBudget,
) -> Result<Feasibility, SolverError> {
    find_irregular_labeling_with(
        g,
        k,
        &SolverOptions {
            budget: *budget,
            ..SolverOptions::default()
        },
    )
}

pub fn find_irregular_labeling_with(
    g: &Graph,
    k: u64,
    opts: &SolverOptions,
) -> Result<Feasibility, SolverError> {
    validate(g)?;
    if k == 0 {
        return Err(SolverError::ZeroLabelBound);
    }
    // Weights live in 2..=2k; fewer slots than edges is hopeless.
    if 2 * k - 1 < g.num_edges() as u64 {
        return Ok(Feasibility::Infeasible);
    }
    let ctx = SearchContext::build(g, opts.twin_pruning);
    let deadline = opts.budget.max_time.map(|t| Instant::now() + t);
    let node_cap = opts.budget.max_nodes.unwrap_or(u64::MAX);
    let (outcome, _) = ctx.search(k, node_cap, deadline);
    if let Feasibility::Found(ref phi) = outcome {
        debug_assert!(phi.span() <= k);
        debug_assert!(is_edge_irregular(g, phi).unwrap().irregular);
    }
    Ok(outcome)
}

/// Computes `es(g)` exactly, or reports the bounds proved before the
/// budget ran out.
pub fn exact_es(g: &Graph, budget: &SearchBudget) -> Result<EsOutcome, SolverError> {
    exact_es_with(
        g,
        &SolverOptions {
            budget: *budget,
            ..SolverOptions::default()
        },
    )
}

pub fn exact_es_with(g: &Graph, opts: &SolverOptions) -> Result<EsOutcome, SolverError> {
    validate(g)?;
    let start = Instant::now();
    let deadline = opts.budget.max_time.map(|t| start + t);
    let ctx = SearchContext::build(g, opts.twin_pruning);
    let lb = lower_bound(g).expect("validated above");
    let mut nodes_total: u64 = 0;
    let mut k = lb;
    loop {
        let capped_out = opts.max_span.is_some_and(|cap| k > cap);
        let node_cap = opts
            .budget
            .max_nodes
            .map_or(u64::MAX, |m| m.saturating_sub(nodes_total));
        let (feasibility, nodes) = if capped_out {
            (Feasibility::BudgetExhausted, 0)
        } else {
            ctx.search(k, node_cap, deadline)
        };
        nodes_total += nodes;
        match feasibility {
            Feasibility::Found(witness) => {
                return Ok(EsOutcome::Exact(EsResult {
                    es_value: k,
                    witness,
                    nodes_explored: nodes_total,
                    elapsed: start.elapsed(),
                    method: Method::Backtracking,
                }))
            }
            // All spans below k + 1 are now proved impossible.
            Feasibility::Infeasible => k += 1,
            Feasibility::BudgetExhausted => {
                return Ok(EsOutcome::Unknown {
                    lower_bound: k,
                    upper_bound: None,
                    nodes_explored: nodes_total,
                    elapsed: start.elapsed(),
                })
            }
        }
    }
}

/// Default vertex-count cap for [`brute_force_es`].
pub const BRUTE_FORCE_CAP: usize = 9;

/// Exhaustive baseline: enumerates every labeling with labels in
/// `1..=k` for growing `k`, in lexicographic order, and returns the
/// first edge irregular one. Exists to cross-check [`exact_es`];
/// `nodes_explored` counts whole labelings examined.
pub fn brute_force_es(g: &Graph) -> Result<EsResult, SolverError> {
    brute_force_es_with_cap(g, BRUTE_FORCE_CAP)
}

pub fn brute_force_es_with_cap(g: &Graph, cap: usize) -> Result<EsResult, SolverError> {
    let n = g.num_vertices();
    if g.num_edges() == 0 {
        return Err(SolverError::NoEdges);
    }
    if n > cap {
        return Err(SolverError::TooLargeForBruteForce { n, cap });
    }
    let start = Instant::now();
    let edges = g.edges();
    let mut nodes: u64 = 0;
    let mut k = lower_bound(g).expect("graph has edges");
    loop {
        // stamp[w] == current labeling id marks weight w as seen.
        let mut stamp = vec![0u64; 2 * k as usize + 1];
        let mut labels = vec![1u64; n];
        'odometer: loop {
            nodes += 1;
            let mut distinct = true;
            for &(u, v) in edges {
                let w = (labels[u] + labels[v]) as usize;
                if stamp[w] == nodes {
                    distinct = false;
                    break;
                }
                stamp[w] = nodes;
            }
            if distinct {
                let witness = VertexLabeling::new(labels).expect("labels start at 1");
                return Ok(EsResult {
                    es_value: k,
                    witness,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                    method: Method::BruteForce,
                });
            }
            // Advance the odometer, last vertex fastest.
            for i in (0..n).rev() {
                if labels[i] < k {
                    labels[i] += 1;
                    labels[i + 1..].fill(1);
                    continue 'odometer;
                }
            }
            break;
        }
        k += 1;
    }
}
