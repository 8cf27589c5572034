//! Helpers shared by the integration test suites.

use edge_irregularity::{Graph, VertexLabeling};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random connected graph on `n >= 2` vertices: keep sampling each pair
/// with probability `p` until the result is connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let g = Graph::new(n, edges).expect("sampled pairs are valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_labeling(rng: &mut ChaCha8Rng, n: usize, max_label: u64) -> VertexLabeling {
    let labels = (0..n).map(|_| rng.gen_range(1..=max_label)).collect();
    VertexLabeling::new(labels).expect("labels drawn from 1..=max")
}

/// Every (cycle_len, leaf_count) with at most `max_order` vertices,
/// leafless pure cycles included.
pub fn cycle_stars_up_to(max_order: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 3..=max_order {
        for l in 0..=max_order - k {
            out.push((k, l));
        }
    }
    out
}
