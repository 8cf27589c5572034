//! Edge irregularity strength of graphs.
//!
//! Take a graph `G` and label every vertex with a positive integer no
//! larger than some bound `k`. Each edge `uv` gets the weight
//! `phi(u) + phi(v)`; the labeling is *edge irregular* when no two
//! edges share a weight. The smallest `k` that admits an edge
//! irregular labeling is the *edge irregularity strength* `es(G)`.
//!
//! This crate computes and certifies `es` values:
//!
//! * [`verify`] checks labelings and provides the general lower bound
//!   `es(G) >= max(ceil((m + 1) / 2), max_degree)`;
//! * [`construct`] produces verified optimal labelings for cycle-star
//!   graphs (a cycle with pendant leaves on one vertex) with cycle
//!   length 3 through 7, where the bound is provably tight;
//! * [`solver`] determines `es` exactly for arbitrary connected graphs
//!   by budgeted backtracking, with a brute-force oracle as a
//!   cross-check;
//! * [`harness`] sweeps cycle-star families with longer cycles, where
//!   tightness of the bound is only conjectured, and caches the
//!   evidence;
//! * [`graph`] and [`io`] supply the graph types and the plain-text
//!   file formats the `esir` command-line tool speaks.
//!
//! ```
//! use edge_irregularity::{
//!     construct_labeling, exact_es, is_edge_irregular, CycleStarSpec, EsOutcome, SearchBudget,
//! };
//!
//! // A 5-cycle with two leaves: the closed form gives es = 4...
//! let spec = CycleStarSpec::new(5, 2)?;
//! let built = construct_labeling(&spec)?;
//! assert_eq!(built.claimed_es, 4);
//! assert!(is_edge_irregular(&spec.build(), &built.labeling)?.irregular);
//!
//! // ...and the exact solver independently lands on the same value.
//! match exact_es(&spec.build(), &SearchBudget::UNLIMITED)? {
//!     EsOutcome::Exact(r) => assert_eq!(r.es_value, 4),
//!     EsOutcome::Unknown { .. } => unreachable!("no budget was set"),
//! }
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod construct;
pub mod graph;
pub mod harness;
pub mod io;
pub mod labeling;
pub mod solver;
pub mod verify;

#[cfg(doctest)]
mod book;

pub use construct::{
    closed_form_es, construct_labeling, CaseTag, ConstructError, ConstructionResult,
};
pub use graph::{CycleStarSpec, Graph, GraphError};
pub use harness::{
    conjectured_es, formula_es, rows_to_csv, rows_to_json, sweep, HarnessError, ReportRow,
    SweepConfig, SweepOutcome, SweepRow, CSV_HEADER,
};
pub use io::{
    graph_to_dot, parse_graph, parse_labeling, serialize_graph, serialize_labeling, ParseError,
};
pub use labeling::{LabelingError, VertexLabeling, MAX_LABEL};
pub use solver::{
    brute_force_es, brute_force_es_with_cap, exact_es, exact_es_with, find_irregular_labeling,
    find_irregular_labeling_with, EsOutcome, EsResult, Feasibility, Method, SearchBudget,
    SolverError, SolverOptions, BRUTE_FORCE_CAP,
};
pub use verify::{
    edge_weights, is_edge_irregular, lower_bound, Verdict, VerifyError, WeightProfile,
};
