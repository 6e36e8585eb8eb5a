//! Simple undirected labeled graphs: construction, vertex deletion, and
//! connectivity tests.

use std::collections::BTreeSet;
use thiserror::Error;

/// A subset of the vertices of some graph.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge pair {index}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        order: usize,
    },
    #[error("edge pair {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    InvalidVertex { vertex: usize, order: usize },
}

/// Simple undirected graph on vertices `0..n` with set-of-neighbors adjacency.
///
/// Values are immutable after construction; every mutation-like operation
/// returns a fresh graph, so values are safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an unordered edge list. Duplicate pairs collapse to
    /// a single edge; self-loops and out-of-range endpoints are rejected with
    /// the index of the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (index, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Sorted degree sequence.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// A vertex of maximum degree, lowest index on ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n).max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
    }

    /// Induced subgraph on the complement of `remove`. Surviving vertices are
    /// relabeled `0..` preserving their relative order.
    pub fn delete_vertices(&self, remove: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&vertex) = remove.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::InvalidVertex {
                vertex,
                order: self.n,
            });
        }
        let mut map = vec![usize::MAX; self.n];
        let mut m = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !remove.contains(&v) {
                *slot = m;
                m += 1;
            }
        }
        let mut g = Graph::empty(m);
        for u in 0..self.n {
            if map[u] == usize::MAX {
                continue;
            }
            for &v in self.adj[u].range(u + 1..) {
                if map[v] != usize::MAX {
                    g.adj[map[u]].insert(map[v]);
                    g.adj[map[v]].insert(map[u]);
                }
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.delete_vertices(&VertexSet::from([v]))
    }

    /// True iff the graph has at most one connected component. The empty graph
    /// and one-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Whitney c-connectivity: the order exceeds `c` and no removal of fewer
    /// than `c` vertices disconnects the graph. Brute force over all removal
    /// subsets of size `< c`, so O(n^c) connectivity checks.
    pub fn vertex_connectivity_at_least(&self, c: usize) -> bool {
        if self.n <= c {
            return false;
        }
        if c == 0 {
            return true;
        }
        self.survives_removals(0, c - 1, &mut VertexSet::new())
    }

    fn survives_removals(&self, start: usize, budget: usize, chosen: &mut VertexSet) -> bool {
        if !self
            .delete_vertices(chosen)
            .expect("chosen vertices are in range")
            .is_connected()
        {
            return false;
        }
        if budget == 0 {
            return true;
        }
        for v in start..self.n {
            chosen.insert(v);
            let ok = self.survives_removals(v + 1, budget - 1, chosen);
            chosen.remove(&v);
            if !ok {
                return false;
            }
        }
        true
    }

    /// True iff deleting some single vertex disconnects the graph.
    pub fn has_cut_vertex(&self) -> bool {
        (0..self.n).any(|v| !self.delete_vertex(v).expect("in range").is_connected())
    }

    /// Disjoint union, with `other`'s vertices relabeled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        g.adj[..self.n].clone_from_slice(&self.adj);
        for u in 0..other.n {
            for &v in &other.adj[u] {
                g.adj[self.n + u].insert(self.n + v);
            }
        }
        g
    }

    /// Upper-triangle adjacency bits in column order:
    /// x(0,1), x(0,2), x(1,2), x(0,3), ...
    pub(crate) fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        bits
    }

    pub(crate) fn from_upper_triangle_bits(n: usize, bits: &[bool]) -> Graph {
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[idx] {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                idx += 1;
            }
        }
        g
    }

    /// Checks the structural invariants (no loops, symmetric adjacency).
    /// Intended for tests and debugging.
    pub fn validate(&self) -> bool {
        if self.adj.len() != self.n {
            return false;
        }
        for u in 0..self.n {
            if self.adj[u].contains(&u) {
                return false;
            }
            for &v in &self.adj[u] {
                if v >= self.n || !self.adj[v].contains(&u) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn new_graph_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);

        let empty3 = Graph::new(3, &[]).unwrap();
        assert_eq!(empty3.edge_count(), 0);

        // duplicate pairs collapse
        let p3 = Graph::new(3, &[(0, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3, path3());
    }

    #[test]
    fn new_graph_rejections() {
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 2)]),
            Err(GraphError::VertexOutOfRange {
                index: 1,
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(
            Graph::new(3, &[(1, 1)]),
            Err(GraphError::SelfLoop {
                index: 0,
                vertex: 1
            })
        );
    }

    #[test]
    fn delete_vertices_examples() {
        let p3 = path3();
        let isolated = p3.delete_vertices(&VertexSet::from([1])).unwrap();
        assert_eq!(isolated.n(), 2);
        assert_eq!(isolated.edge_count(), 0);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.delete_vertices(&VertexSet::new()).unwrap(), k2);

        assert_eq!(
            p3.delete_vertices(&VertexSet::from([7])),
            Err(GraphError::InvalidVertex {
                vertex: 7,
                order: 3
            })
        );
    }

    #[test]
    fn delete_relabels_in_order() {
        // C4 minus vertex 1 leaves the path 0-2-3, relabeled 0-1-2 with
        // surviving edges (0,2)->(0,1)? no: edges (0,3),(2,3) -> (0,2),(1,2)
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = c4.delete_vertex(1).unwrap();
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn connectivity_basics() {
        assert!(Graph::new(2, &[(0, 1)]).unwrap().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn vertex_connectivity_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(k2.vertex_connectivity_at_least(1));
        assert!(!k2.vertex_connectivity_at_least(2)); // n > c fails

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.vertex_connectivity_at_least(3));
        assert!(!k4.vertex_connectivity_at_least(4));

        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.vertex_connectivity_at_least(1));
        assert!(!star.vertex_connectivity_at_least(2));
        assert!(star.has_cut_vertex());
    }

    #[test]
    fn connectivity_matches_is_connected_for_c1() {
        // all graphs on 4 vertices, labeled
        for mask in 0u32..64 {
            let mut edges = Vec::new();
            let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
            for (i, &p) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    edges.push(p);
                }
            }
            let g = Graph::new(4, &edges).unwrap();
            assert_eq!(g.vertex_connectivity_at_least(1), g.is_connected());
            assert!(g.validate());
        }
    }

    #[test]
    fn connectivity_monotone() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut prev = true;
        for c in 0..=5 {
            let cur = c5.vertex_connectivity_at_least(c);
            assert!(prev || !cur, "connectivity not monotone at c={c}");
            prev = cur;
        }
        assert!(c5.vertex_connectivity_at_least(2));
        assert!(!c5.vertex_connectivity_at_least(3));
    }

    #[test]
    fn bit_roundtrip() {
        let g = Graph::new(5, &[(0, 3), (1, 2), (2, 4)]).unwrap();
        let bits = g.upper_triangle_bits();
        assert_eq!(Graph::from_upper_triangle_bits(5, &bits), g);
    }
}
