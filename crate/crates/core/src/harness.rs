//! Sweeping cycle-star families and recording the evidence.
//!
//! For cycle lengths 3 through 7 the optimum is settled by
//! [`crate::construct`]. For every longer cycle the same unified
//! expression — `max(ceil((n + 1) / 2), n - cycle_len + 2)`, i.e. the
//! general lower bound itself — is the *conjectured* value, and
//! [`sweep`] exists to test it: each grid instance gets an exact solver
//! run, and rows where the solver disagrees with [`conjectured_es`]
//! come back with `agrees = false`. A disagreement is a finding to
//! report, not an error.
//!
//! Sweep results are cached as JSON Lines, one row per line, appended
//! as instances finish. A rerun only computes rows the cache does not
//! already hold, so interrupted sweeps resume where they left off.
//! When one instance appears on several lines the last line wins.

use crate::construct::{closed_form_es, construct_labeling, ConstructError};
use crate::graph::{CycleStarSpec, GraphError};
use crate::solver::{exact_es, EsOutcome, Method, SearchBudget, SolverError};
use crate::verify::lower_bound;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("conjectured value is defined for cycle length 8 and up, got {0}")]
    ConjectureRange(usize),
    #[error("conjectured value needs at least one leaf")]
    ConjectureNeedsLeaves,
    #[error("invalid sweep range: {0}")]
    InvalidRange(&'static str),
    #[error("cache {path}: {source}")]
    CacheIo {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Conjectured `es` for a cycle-star with cycle length at least 8:
/// the lower bound is conjectured to stay tight beyond the proven
/// cases, so this returns `max(ceil((n + 1) / 2), n - cycle_len + 2)`.
pub fn conjectured_es(spec: &CycleStarSpec) -> Result<u64, HarnessError> {
    let k = spec.cycle_len();
    if k < 8 {
        return Err(HarnessError::ConjectureRange(k));
    }
    if spec.leaf_count() == 0 {
        return Err(HarnessError::ConjectureNeedsLeaves);
    }
    let n = spec.order() as u64;
    Ok(((n + 1).div_ceil(2)).max(n - k as u64 + 2))
}

/// Predicted `es`: the proven closed form for cycle lengths 3..=7, the
/// conjectured value beyond.
pub fn formula_es(spec: &CycleStarSpec) -> Result<u64, HarnessError> {
    if spec.cycle_len() <= 7 {
        Ok(closed_form_es(spec)?)
    } else {
        conjectured_es(spec)
    }
}

/// One sweep instance, as stored in the cache (JSON Lines) and fed to
/// the report emitters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub lower_bound: u64,
    pub es_formula: u64,
    /// `None` when the per-instance budget ran out.
    pub es_exact: Option<u64>,
    pub agrees: Option<bool>,
    pub witness: Option<Vec<u64>>,
    pub method: Method,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub cycle_lens: RangeInclusive<usize>,
    pub leaf_counts: RangeInclusive<usize>,
    /// Budget applied to each instance separately.
    pub budget: SearchBudget,
    /// Worker threads; 0 behaves like 1.
    pub jobs: usize,
}

#[derive(Debug)]
pub struct SweepOutcome {
    /// One row per grid instance, sorted by (k, l).
    pub rows: Vec<SweepRow>,
    pub freshly_computed: usize,
    pub from_cache: usize,
    /// Human-readable notes, e.g. malformed cache lines that were skipped.
    pub warnings: Vec<String>,
}

fn cache_err(path: &Path) -> impl Fn(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::CacheIo {
        path: path.to_path_buf(),
        source,
    }
}

/// Cached rows keyed by (k, l), plus warnings for lines that were skipped.
type CachedRows = (HashMap<(usize, usize), SweepRow>, Vec<String>);

fn load_cache(path: &Path) -> Result<CachedRows, HarnessError> {
    let mut rows = HashMap::new();
    let mut warnings = Vec::new();
    if !path.exists() {
        return Ok((rows, warnings));
    }
    let file = std::fs::File::open(path).map_err(cache_err(path))?;
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(cache_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<SweepRow>(&line) {
            // Later lines overwrite earlier ones for the same instance.
            Ok(row) => {
                rows.insert((row.k, row.l), row);
            }
            Err(e) => warnings.push(format!(
                "cache line {}: skipping malformed entry ({e}); the row will be recomputed if needed",
                i + 1
            )),
        }
    }
    Ok((rows, warnings))
}

fn compute_row(k: usize, l: usize, budget: &SearchBudget) -> Result<SweepRow, HarnessError> {
    let spec = CycleStarSpec::new(k, l)?;
    let graph = spec.build();
    let lb = lower_bound(&graph).expect("cycle-stars always have edges");
    let es_formula = formula_es(&spec)?;
    let started = Instant::now();
    let (es_exact, witness, method, nodes) = if k <= 7 {
        // The construction is a verified optimal witness, so no search
        // is needed: its span equals the lower bound.
        let c = construct_labeling(&spec)?;
        (
            Some(c.claimed_es),
            Some(c.labeling.labels().to_vec()),
            Method::Construction,
            0,
        )
    } else {
        match exact_es(&graph, budget)? {
            EsOutcome::Exact(r) => (
                Some(r.es_value),
                Some(r.witness.labels().to_vec()),
                r.method,
                r.nodes_explored,
            ),
            EsOutcome::Unknown { nodes_explored, .. } => {
                (None, None, Method::Backtracking, nodes_explored)
            }
        }
    };
    Ok(SweepRow {
        k,
        l,
        n: spec.order(),
        lower_bound: lb,
        es_formula,
        es_exact,
        agrees: es_exact.map(|e| e == es_formula),
        witness,
        method,
        nodes,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Runs (or resumes) a sweep over the grid `cycle_lens x leaf_counts`,
/// reading and appending the JSON Lines cache at `cache_path`.
pub fn sweep(config: &SweepConfig, cache_path: &Path) -> Result<SweepOutcome, HarnessError> {
    if config.cycle_lens.is_empty() {
        return Err(HarnessError::InvalidRange("cycle length range is empty"));
    }
    if config.leaf_counts.is_empty() {
        return Err(HarnessError::InvalidRange("leaf count range is empty"));
    }
    if *config.cycle_lens.start() < 3 {
        return Err(HarnessError::InvalidRange("cycle lengths start at 3"));
    }
    if *config.leaf_counts.start() < 1 {
        return Err(HarnessError::InvalidRange(
            "sweeps need at least one leaf per instance",
        ));
    }

    let grid: Vec<(usize, usize)> = config
        .cycle_lens
        .clone()
        .flat_map(|k| config.leaf_counts.clone().map(move |l| (k, l)))
        .collect();
    let (cached, warnings) = load_cache(cache_path)?;
    let pending: Vec<(usize, usize)> = grid
        .iter()
        .copied()
        .filter(|key| !cached.contains_key(key))
        .collect();

    let mut fresh: HashMap<(usize, usize), SweepRow> = HashMap::new();
    if !pending.is_empty() {
        // Single serialized appender; every finished row is flushed
        // immediately so an interrupted sweep still resumes.
        let file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(cache_path)
            .map_err(cache_err(cache_path))?;
        let appender = Mutex::new(file);
        let next = AtomicUsize::new(0);
        let results = Mutex::new(Vec::with_capacity(pending.len()));
        let failure: Mutex<Option<HarnessError>> = Mutex::new(None);
        let workers = config.jobs.max(1).min(pending.len());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(&(k, l)) = pending.get(i) else { break };
                    let row = match compute_row(k, l, &config.budget) {
                        Ok(row) => row,
                        Err(e) => {
                            failure.lock().unwrap().get_or_insert(e);
                            break;
                        }
                    };
                    let line = serde_json::to_string(&row).expect("rows serialize");
                    {
                        let mut out = appender.lock().unwrap();
                        if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                            failure
                                .lock()
                                .unwrap()
                                .get_or_insert(cache_err(cache_path)(e));
                            break;
                        }
                    }
                    results.lock().unwrap().push(row);
                });
            }
        });
        if let Some(e) = failure.into_inner().unwrap() {
            return Err(e);
        }
        for row in results.into_inner().unwrap() {
            fresh.insert((row.k, row.l), row);
        }
    }

    let freshly_computed = fresh.len();
    let from_cache = grid.len() - freshly_computed;
    let rows = grid
        .into_iter()
        .map(|key| {
            cached
                .get(&key)
                .or_else(|| fresh.get(&key))
                .cloned()
                .expect("every grid instance is cached or freshly computed")
        })
        .collect();
    Ok(SweepOutcome {
        rows,
        freshly_computed,
        from_cache,
        warnings,
    })
}

/// Report row: the cache row minus the witness, matching the CSV columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub lower_bound: u64,
    pub es_formula: u64,
    pub es_exact: Option<u64>,
    pub agrees: Option<bool>,
    pub method: Method,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl From<&SweepRow> for ReportRow {
    fn from(r: &SweepRow) -> Self {
        ReportRow {
            k: r.k,
            l: r.l,
            n: r.n,
            lower_bound: r.lower_bound,
            es_formula: r.es_formula,
            es_exact: r.es_exact,
            agrees: r.agrees,
            method: r.method,
            nodes: r.nodes,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

pub const CSV_HEADER: &str = "k,l,n,lower_bound,es_formula,es_exact,agrees,method,nodes,elapsed_ms";

/// CSV report; unknown `es_exact`/`agrees` render as empty cells.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let es_exact = r.es_exact.map(|v| v.to_string()).unwrap_or_default();
        let agrees = r.agrees.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.k,
            r.l,
            r.n,
            r.lower_bound,
            r.es_formula,
            es_exact,
            agrees,
            r.method,
            r.nodes,
            r.elapsed_ms
        ));
    }
    out
}

/// JSON report: an array of objects with the same fields as the CSV.
pub fn rows_to_json(rows: &[SweepRow]) -> String {
    let report: Vec<ReportRow> = rows.iter().map(ReportRow::from).collect();
    let mut s = serde_json::to_string_pretty(&report).expect("rows serialize");
    s.push('\n');
    s
}
