//! Exact-arithmetic toolkit for matching polynomials: matching counts,
//! integrality of matching polynomial zeros, the built-in H_k / H'_k / F7
//! graph families, and a graph6-stream search for matching-integral graphs
//! of prescribed vertex connectivity.

pub mod canon;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod poly;
pub mod search;
pub mod verify;

pub use families::{
    build_f7, build_hk, build_hk_prime, expected_mu, verify_family, FamilyError, FamilyKind,
    FamilyReport, FamilySpec,
};
pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use matching::{
    count_matchings, is_matching_integral, matching_polynomial, matching_polynomial_recurrence,
    matching_polynomial_recurrence_with, MatchVector, MuCache,
};
pub use poly::{format_zero_multiset, IntPolynomial, IntegralityReport, PolyError};
pub use search::{
    filter_collect, filter_stream, generate_small_graphs, is_candidate, random_graph, LineError,
    SearchConfig, SearchError, SearchHit,
};

/// Minimal JSON string escaping for hand-built JSON output.
pub(crate) fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
