//! Search for matching-integral graphs of prescribed vertex connectivity in a
//! graph6 line stream or the built-in exhaustive generator for small orders.

use crate::canon::canonical_bits;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::matching::is_matching_integral;
use crate::poly::format_zero_multiset;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{mpsc, Mutex};
use std::thread;
use thiserror::Error;

/// Hard cap for the built-in isomorph-free generator.
pub const GENERATOR_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(
        "built-in generation supports 1..={GENERATOR_CAP} vertices, got {n}; \
         pipe an external graph6 stream for larger orders"
    )]
    OrderOutOfRange { n: usize },
}

/// Filter settings for [`filter_stream`] and [`is_candidate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub min_connectivity: usize,
    /// Number of graphs processed concurrently.
    pub parallelism: usize,
    /// Emit hits in input order (buffers out-of-order completions).
    pub ordered_output: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min_connectivity: 0,
            parallelism: 1,
            ordered_output: false,
        }
    }
}

/// A graph that passed both the connectivity and the integrality filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub graph6: String,
    pub n: usize,
    /// Integer zeros of the matching polynomial with multiplicities.
    pub zeros: BTreeMap<i64, u32>,
    /// The connectivity threshold this hit was checked against.
    pub connectivity_checked: usize,
}

impl SearchHit {
    /// `<graph6> TAB n=<n> TAB zeros=<z1^m1,...>`
    pub fn to_line(&self) -> String {
        format!(
            "{}\tn={}\tzeros={}",
            self.graph6,
            self.n,
            format_zero_multiset(&self.zeros)
        )
    }

    pub fn to_json_line(&self) -> String {
        let zeros: Vec<String> = self
            .zeros
            .iter()
            .map(|(z, m)| format!("[{z},{m}]"))
            .collect();
        format!(
            "{{\"graph6\":\"{}\",\"n\":{},\"zeros\":[{}],\"connectivity_checked\":{}}}",
            crate::json_escape(&self.graph6),
            self.n,
            zeros.join(","),
            self.connectivity_checked,
        )
    }
}

/// A per-line failure from the stream filter; processing continues past it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based input line number.
    pub line: usize,
    pub message: String,
}

/// Yields one representative per isomorphism class of simple graphs on `n`
/// vertices, deduplicated by the minimal adjacency bit-string. Works by
/// extending each (n-1)-vertex class with every neighbor subset of a new
/// vertex, so every class on `n` vertices is reached.
pub fn generate_small_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    if !(1..=GENERATOR_CAP).contains(&n) {
        return Err(SearchError::OrderOutOfRange { n });
    }
    let mut level: BTreeSet<Vec<bool>> = BTreeSet::from([Vec::new()]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for bits in &level {
            let g = Graph::from_upper_triangle_bits(m - 1, bits);
            let base_edges = g.edges();
            for mask in 0u32..1 << (m - 1) {
                let mut edges = base_edges.clone();
                for v in 0..m - 1 {
                    if mask >> v & 1 == 1 {
                        edges.push((v, m - 1));
                    }
                }
                let h = Graph::new(m, &edges).expect("extension is in range");
                next.insert(canonical_bits(&h));
            }
        }
        level = next;
    }
    Ok(level
        .iter()
        .map(|bits| Graph::from_upper_triangle_bits(n, bits))
        .collect())
}

/// Erdos-Renyi graph with independent edge probability `edge_prob`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are in range")
}

/// Applies both filters to one graph. Connectivity is checked first when the
/// threshold is at least 2 (cheap reject); otherwise integrality first.
pub fn is_candidate(g: &Graph, cfg: &SearchConfig) -> Option<SearchHit> {
    let c = cfg.min_connectivity;
    if c >= 2 {
        if !g.vertex_connectivity_at_least(c) {
            return None;
        }
        let (integral, report) = is_matching_integral(g);
        if !integral {
            return None;
        }
        Some(make_hit(g, report.zeros, c))
    } else {
        let (integral, report) = is_matching_integral(g);
        if !integral || !g.vertex_connectivity_at_least(c) {
            return None;
        }
        Some(make_hit(g, report.zeros, c))
    }
}

fn make_hit(g: &Graph, zeros: BTreeMap<i64, u32>, connectivity_checked: usize) -> SearchHit {
    SearchHit {
        // all supported sources (graph6 lines, the n <= 8 generator) fit the
        // short form
        graph6: to_graph6(g).expect("search graphs fit short-form graph6"),
        n: g.n(),
        zeros,
        connectivity_checked,
    }
}

fn process_line(line: &str, cfg: &SearchConfig) -> Result<Option<SearchHit>, String> {
    let g = parse_graph6(line).map_err(|e| e.to_string())?;
    Ok(is_candidate(&g, cfg))
}

/// Filters a stream of graph6 lines. Hits go to `on_hit`; per-line parse
/// failures go to `on_err` with their line number and do not abort the run.
/// With `ordered_output` both callbacks fire in input order; otherwise the
/// order is unspecified but the set of hits is deterministic.
pub fn filter_stream<I, FH, FE>(cfg: &SearchConfig, lines: I, mut on_hit: FH, mut on_err: FE)
where
    I: IntoIterator<Item = String>,
    I::IntoIter: Send,
    FH: FnMut(SearchHit),
    FE: FnMut(LineError),
{
    let jobs = cfg.parallelism.max(1);
    if jobs == 1 {
        for (idx, line) in lines.into_iter().enumerate() {
            emit(idx, process_line(&line, cfg), &mut on_hit, &mut on_err);
        }
        return;
    }
    let work = Mutex::new(lines.into_iter().enumerate());
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for _ in 0..jobs {
            let tx = tx.clone();
            let work = &work;
            scope.spawn(move || loop {
                let item = work.lock().expect("work queue poisoned").next();
                let Some((idx, line)) = item else { break };
                if tx.send((idx, process_line(&line, cfg))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        if cfg.ordered_output {
            let mut pending = BTreeMap::new();
            let mut next = 0usize;
            for (idx, outcome) in rx {
                pending.insert(idx, outcome);
                while let Some(outcome) = pending.remove(&next) {
                    emit(next, outcome, &mut on_hit, &mut on_err);
                    next += 1;
                }
            }
        } else {
            for (idx, outcome) in rx {
                emit(idx, outcome, &mut on_hit, &mut on_err);
            }
        }
    });
}

fn emit<FH: FnMut(SearchHit), FE: FnMut(LineError)>(
    idx: usize,
    outcome: Result<Option<SearchHit>, String>,
    on_hit: &mut FH,
    on_err: &mut FE,
) {
    match outcome {
        Ok(Some(hit)) => on_hit(hit),
        Ok(None) => {}
        Err(message) => on_err(LineError {
            line: idx + 1,
            message,
        }),
    }
}

/// Convenience wrapper collecting hits and errors into vectors.
pub fn filter_collect(cfg: &SearchConfig, lines: Vec<String>) -> (Vec<SearchHit>, Vec<LineError>) {
    let mut hits = Vec::new();
    let mut errs = Vec::new();
    filter_stream(cfg, lines, |h| hits.push(h), |e| errs.push(e));
    (hits, errs)
}
