//! Plain-text graph and labeling files.
//!
//! Graph format: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. Labeling format: `n` whitespace-separated positive integers.
//! In both formats `#` starts a comment line and blank lines are skipped.

use crate::graph::{Graph, GraphError};
use crate::labeling::{VertexLabeling, MAX_LABEL};
use std::collections::HashSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: header must be two integers `n m`")]
    MalformedHeader { line: usize },
    #[error("line {line}: `{token}` is not a valid integer")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected an edge `u v` (two endpoints)")]
    MalformedEdge { line: usize },
    #[error("line {line}: {source}")]
    InvalidEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("header declares {expected} edges but the file lists {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("expected {expected} labels but the file lists {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("line {line}: labels must be positive integers")]
    NonPositiveLabel { line: usize },
    #[error("line {line}: label exceeds the supported maximum")]
    LabelTooLarge { line: usize },
}

/// Lines that carry data: 1-based line number plus the text before any
/// comment handling (comment and blank lines are filtered out here).
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, s)| !s.is_empty() && !s.starts_with('#'))
}

fn parse_usize(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::BadToken {
        line,
        token: token.to_string(),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let (n_tok, m_tok) = match (it.next(), it.next(), it.next()) {
        (Some(n), Some(m), None) => (n, m),
        _ => return Err(ParseError::MalformedHeader { line: header_line }),
    };
    let n = parse_usize(n_tok, header_line)?;
    let m = parse_usize(m_tok, header_line)?;
    if n == 0 {
        return Err(ParseError::InvalidEdge {
            line: header_line,
            source: GraphError::NoVertices,
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for (line, s) in lines {
        let mut it = s.split_whitespace();
        let (u_tok, v_tok) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::MalformedEdge { line }),
        };
        let u = parse_usize(u_tok, line)?;
        let v = parse_usize(v_tok, line)?;
        let err = |source| ParseError::InvalidEdge { line, source };
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        if let Some(&bad) = [u, v].iter().find(|&&x| x >= n) {
            return Err(err(GraphError::IndexOutOfRange {
                index: bad,
                num_vertices: n,
            }));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(err(GraphError::DuplicateEdge(e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("edges validated during parse"))
}

/// Writes the header plus the edge list sorted lexicographically.
pub fn serialize_graph(g: &Graph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_labeling(text: &str, expected_len: usize) -> Result<VertexLabeling, ParseError> {
    let mut labels = Vec::with_capacity(expected_len);
    for (line, s) in data_lines(text) {
        for token in s.split_whitespace() {
            let label: u64 = token.parse().map_err(|_| ParseError::BadToken {
                line,
                token: token.to_string(),
            })?;
            if label == 0 {
                return Err(ParseError::NonPositiveLabel { line });
            }
            if label > MAX_LABEL {
                return Err(ParseError::LabelTooLarge { line });
            }
            labels.push(label);
        }
    }
    if labels.len() != expected_len {
        return Err(ParseError::LabelCount {
            expected: expected_len,
            found: labels.len(),
        });
    }
    Ok(VertexLabeling::new(labels).expect("labels validated during parse"))
}

pub fn serialize_labeling(phi: &VertexLabeling) -> String {
    let words: Vec<String> = phi.labels().iter().map(u64::to_string).collect();
    words.join(" ") + "\n"
}

/// Graphviz rendering, mostly for eyeballing small instances.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.num_vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CycleStarSpec;

    #[test]
    fn parses_single_edge() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn serializes_triangle_with_leaf() {
        let g = CycleStarSpec::new(3, 1).unwrap().build();
        assert_eq!(serialize_graph(&g), "4 4\n0 1\n0 2\n0 3\n2 3\n");
    }

    #[test]
    fn reports_out_of_range_with_line() {
        assert_eq!(
            parse_graph("3 1\n0 3\n"),
            Err(ParseError::InvalidEdge {
                line: 2,
                source: GraphError::IndexOutOfRange {
                    index: 3,
                    num_vertices: 3
                }
            })
        );
    }

    #[test]
    fn reports_header_and_count_problems() {
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert_eq!(
            parse_graph("2\n0 1\n"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_graph("2 2\n0 1\n"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph("2 1\nx 1\n"),
            Err(ParseError::BadToken {
                line: 2,
                token: "x".into()
            })
        );
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let text = "# a triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.num_edges(), 3);
    }

    #[test]
    fn graph_round_trips() {
        for (k, l) in [(3, 1), (4, 2), (7, 4)] {
            let g = CycleStarSpec::new(k, l).unwrap().build();
            assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g.normalized());
        }
    }

    #[test]
    fn labeling_round_trips() {
        let phi = VertexLabeling::new(vec![1, 1, 2, 3]).unwrap();
        let text = serialize_labeling(&phi);
        assert_eq!(text, "1 1 2 3\n");
        assert_eq!(parse_labeling(&text, 4).unwrap(), phi);
    }

    #[test]
    fn labeling_errors() {
        assert_eq!(
            parse_labeling("1 0 2", 3),
            Err(ParseError::NonPositiveLabel { line: 1 })
        );
        assert_eq!(
            parse_labeling("1 2", 3),
            Err(ParseError::LabelCount {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            parse_labeling("1 two 3", 3),
            Err(ParseError::BadToken {
                line: 1,
                token: "two".into()
            })
        );
    }

    #[test]
    fn dot_output_lists_all_edges() {
        let g = CycleStarSpec::new(3, 1).unwrap().build();
        let dot = graph_to_dot(&g);
        assert!(dot.starts_with("graph {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("2 -- 3;"));
    }
}
