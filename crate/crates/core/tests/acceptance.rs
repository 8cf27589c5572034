//! Acceptance suite: every test here pins one externally promised
//! behavior of the library, end to end, and prints a `PASS` line with
//! its measurements (visible under `--nocapture`).

mod common;

use common::{cycle_stars_up_to, random_connected_graph, random_labeling};
use edge_irregularity::{
    brute_force_es, closed_form_es, construct_labeling, edge_weights, exact_es, exact_es_with,
    is_edge_irregular, lower_bound, parse_graph, parse_labeling, rows_to_csv, serialize_graph,
    serialize_labeling, sweep, CycleStarSpec, EsOutcome, EsResult, Graph, Method, SearchBudget,
    SolverOptions, SweepConfig, VertexLabeling,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn build(k: usize, l: usize) -> Graph {
    CycleStarSpec::new(k, l).unwrap().build()
}

fn solve(g: &Graph) -> EsResult {
    match exact_es(g, &SearchBudget::UNLIMITED).unwrap() {
        EsOutcome::Exact(r) => r,
        EsOutcome::Unknown { .. } => unreachable!("unlimited budgets always settle"),
    }
}

/// The eleven published optimum values for the smallest cycle-stars,
/// recomputed from scratch by the exact solver.
#[test]
fn golden_es_values_solve_quickly() {
    let golden: [(usize, usize, u64); 11] = [
        (3, 1, 3),
        (4, 1, 3),
        (5, 1, 4),
        (5, 2, 4),
        (6, 1, 4),
        (6, 2, 5),
        (6, 3, 5),
        (7, 1, 5),
        (7, 2, 5),
        (7, 3, 6),
        (7, 4, 6),
    ];
    let started = Instant::now();
    for (k, l, want) in golden {
        let g = build(k, l);
        let r = solve(&g);
        assert_eq!(r.es_value, want, "es of cycle-star ({k}, {l})");
        assert!(is_edge_irregular(&g, &r.witness).unwrap().irregular);
        // A witness with a smaller span would have surfaced at a
        // smaller k, so the span is exactly the optimum.
        assert_eq!(r.witness.span(), want);
        assert_eq!(r.method, Method::Backtracking);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("PASS golden es values: 11 instances re-derived by search in {elapsed:?}");
}

/// Closed-form labelings verify and hit the table value for every
/// supported cycle length and leaf counts up to 50 — fast, since no
/// search is involved.
#[test]
fn constructions_certify_across_the_table() {
    let started = Instant::now();
    let mut count = 0;
    for k in 3..=7 {
        for l in 1..=50 {
            let spec = CycleStarSpec::new(k, l).unwrap();
            let r = construct_labeling(&spec).unwrap();
            let g = spec.build();
            assert!(
                is_edge_irregular(&g, &r.labeling).unwrap().irregular,
                "({k}, {l})"
            );
            assert_eq!(
                r.labeling.span(),
                closed_form_es(&spec).unwrap(),
                "({k}, {l})"
            );
            count += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS constructions: {count} labelings certified in {elapsed:?}");
}

/// The exact solver independently reproduces the closed form on every
/// cycle-star small enough to search at a desk (n <= 13).
#[test]
fn exact_search_matches_the_closed_form_at_desk_scale() {
    let started = Instant::now();
    let mut count = 0;
    for k in 3..=7usize {
        for l in 1..=13 - k {
            let spec = CycleStarSpec::new(k, l).unwrap();
            let r = solve(&spec.build());
            assert_eq!(
                r.es_value,
                closed_form_es(&spec).unwrap(),
                "cycle-star ({k}, {l})"
            );
            count += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!("PASS exact optimality: {count} instances with n <= 13 in {elapsed:?}");
}

/// Backtracking and plain enumeration are two independent programs;
/// they must agree everywhere both can run.
#[test]
fn solver_agrees_with_the_brute_force_oracle() {
    let started = Instant::now();
    let mut checked = 0;
    for (k, l) in cycle_stars_up_to(7) {
        let g = build(k, l);
        let fast = solve(&g).es_value;
        let slow = brute_force_es(&g).unwrap().es_value;
        assert_eq!(fast, slow, "cycle-star ({k}, {l})");
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xE5C0DE);
    for i in 0..100 {
        let n = 2 + i % 5; // 2..=6
        let g = random_connected_graph(&mut rng, n, 0.5);
        let fast = solve(&g).es_value;
        let slow = brute_force_es(&g).unwrap().es_value;
        assert_eq!(fast, slow, "random graph #{i} (n={n}, m={})", g.num_edges());
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("PASS oracle equivalence: {checked} graphs agree in {elapsed:?}");
}

/// Sweeping the first conjectured cycle lengths at desk scale: every
/// row must be internally sound and any disagreement must surface in
/// the report rather than fail the run. (Agreement itself is evidence,
/// not a promise.)
#[test]
fn conjecture_sweep_reports_sound_rows() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let mut rows = Vec::new();
    for (k, max_l) in [(8usize, 5usize), (9, 4)] {
        let config = SweepConfig {
            cycle_lens: k..=k,
            leaf_counts: 1..=max_l, // keeps n <= 13
            budget: SearchBudget::UNLIMITED,
            jobs: 2,
        };
        rows.extend(sweep(&config, &cache).unwrap().rows);
    }
    assert_eq!(rows.len(), 9);
    let mut mismatches = 0;
    for row in &rows {
        assert!(row.n <= 13);
        assert_eq!(row.n, row.k + row.l);
        let g = build(row.k, row.l);
        assert_eq!(row.lower_bound, lower_bound(&g).unwrap());
        assert!(
            row.es_formula >= row.lower_bound,
            "predicted value may never undercut the proven bound"
        );
        let es = row.es_exact.expect("unlimited budget settles every row");
        assert!(es >= row.lower_bound);
        assert_eq!(row.agrees, Some(es == row.es_formula));
        assert_eq!(row.method, Method::Backtracking);
        let phi = VertexLabeling::new(row.witness.clone().expect("settled rows carry a witness"))
            .unwrap();
        assert!(is_edge_irregular(&g, &phi).unwrap().irregular);
        assert_eq!(phi.span(), es);
        if row.agrees == Some(false) {
            mismatches += 1;
        }
    }
    // Mismatches, if any, must be visible in the emitted report.
    let csv = rows_to_csv(&rows);
    assert_eq!(
        csv.matches(",false,").count(),
        mismatches,
        "every mismatch row appears in the CSV"
    );
    let elapsed = started.elapsed();
    println!(
        "PASS conjecture sweep: 9 rows sound, {mismatches} mismatch(es) flagged in {elapsed:?}"
    );
}

/// Randomized invariants: weight arithmetic on a thousand seeded
/// (graph, labeling) pairs, and the symmetry-breaking toggle across the
/// small-graph corpus.
#[test]
fn randomized_invariants_hold() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..1000 {
        let n = rng.gen_range(2..=8);
        let g = random_connected_graph(&mut rng, n, 0.5);
        let max_label = rng.gen_range(1..=12);
        let phi = random_labeling(&mut rng, n, max_label);
        let profile = edge_weights(&g, &phi).unwrap();
        let span = phi.span();
        let mut total = 0u64;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let w = profile.weights()[i];
            assert_eq!(w, phi.get(u) + phi.get(v), "round {round}");
            assert!((2..=2 * span).contains(&w), "round {round}");
            total += w;
        }
        let by_degree: u64 = g
            .degrees()
            .iter()
            .enumerate()
            .map(|(v, &d)| d as u64 * phi.get(v))
            .sum();
        assert_eq!(total, by_degree, "round {round}");
        if is_edge_irregular(&g, &phi).unwrap().irregular {
            assert!(span >= lower_bound(&g).unwrap(), "round {round}");
        }
    }

    let mut corpus: Vec<Graph> = cycle_stars_up_to(7)
        .into_iter()
        .map(|(k, l)| build(k, l))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    corpus.extend((0..50).map(|i| random_connected_graph(&mut rng, 2 + i % 5, 0.5)));
    for (i, g) in corpus.iter().enumerate() {
        let es_of = |twin_pruning| {
            let opts = SolverOptions {
                twin_pruning,
                ..SolverOptions::default()
            };
            match exact_es_with(g, &opts).unwrap() {
                EsOutcome::Exact(r) => r.es_value,
                EsOutcome::Unknown { .. } => unreachable!("no budget set"),
            }
        };
        assert_eq!(es_of(true), es_of(false), "corpus graph #{i}");
    }
    let elapsed = started.elapsed();
    println!(
        "PASS invariants: 1000 labeled pairs checked, twin toggle agrees on {} graphs in {elapsed:?}",
        corpus.len()
    );
}

/// Files round-trip, and a warm cache rerun does no solving and
/// reproduces the report byte for byte.
#[test]
fn files_and_cache_round_trip() {
    let started = Instant::now();
    for (k, l) in cycle_stars_up_to(10) {
        let g = build(k, l);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g.normalized());
    }
    for k in 3..=7 {
        for l in 1..=10 {
            let r = construct_labeling(&CycleStarSpec::new(k, l).unwrap()).unwrap();
            let text = serialize_labeling(&r.labeling);
            assert_eq!(parse_labeling(&text, k + l).unwrap(), r.labeling);
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let config = SweepConfig {
        cycle_lens: 3..=8,
        leaf_counts: 1..=2,
        budget: SearchBudget::UNLIMITED,
        jobs: 2,
    };
    let cold = sweep(&config, &cache).unwrap();
    assert_eq!(cold.freshly_computed, 12);
    let cold_csv = rows_to_csv(&cold.rows);

    let warm = sweep(&config, &cache).unwrap();
    assert_eq!(
        warm.freshly_computed, 0,
        "a warm rerun must not solve anything"
    );
    assert_eq!(warm.from_cache, 12);
    assert_eq!(
        rows_to_csv(&warm.rows),
        cold_csv,
        "reports must be byte-identical"
    );
    let elapsed = started.elapsed();
    println!("PASS plumbing: round trips and warm-cache rerun in {elapsed:?}");
}
