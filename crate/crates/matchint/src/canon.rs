//! Canonical labeling for small graphs: the lexicographically minimal
//! upper-triangle adjacency bit-string over all vertex permutations.
//!
//! Used as an isomorphism-collapsing memo key and for isomorph-free
//! generation. Exhaustive over permutations, with branch-and-bound pruning on
//! the bit-string prefix and a twin-vertex cut, so it is only intended for
//! graphs up to [`CANON_MAX`] vertices.

use crate::graph::Graph;

/// Hard cap for the permutation search.
pub const CANON_MAX: usize = 16;

/// The minimal upper-triangle bit-string of `g` over all relabelings, in the
/// same column order as [`Graph`]'s labeled bit-string.
///
/// Panics if `g` has more than [`CANON_MAX`] vertices.
pub fn canonical_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    assert!(n <= CANON_MAX, "canonical form limited to {CANON_MAX} vertices");
    if n <= 1 {
        return Vec::new();
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let total = n * (n - 1) / 2;
    let mut best = g.upper_triangle_bits();
    let mut cur = vec![false; total];
    let mut perm = Vec::with_capacity(n);
    descend(&masks, n, &mut perm, 0, &mut cur, &mut best);
    best
}

/// Canonical graph: `g` relabeled to realize its canonical bit-string.
pub fn canonical_form(g: &Graph) -> Graph {
    Graph::from_upper_triangle_bits(g.n(), &canonical_bits(g))
}

fn descend(
    masks: &[u32],
    n: usize,
    perm: &mut Vec<usize>,
    used: u32,
    cur: &mut Vec<bool>,
    best: &mut Vec<bool>,
) {
    let pos = perm.len();
    if pos == n {
        if cur[..] < best[..] {
            best.copy_from_slice(cur);
        }
        return;
    }
    let start = pos * pos.saturating_sub(1) / 2;
    let mut tried: Vec<usize> = Vec::new();
    for u in 0..n {
        if used >> u & 1 == 1 {
            continue;
        }
        // interchangeable with an already-tried candidate
        if tried.iter().any(|&w| twins(masks, u, w)) {
            continue;
        }
        tried.push(u);
        for (i, &p) in perm.iter().enumerate() {
            cur[start + i] = masks[u] >> p & 1 == 1;
        }
        let upto = start + pos;
        if cur[..upto] > best[..upto] {
            continue;
        }
        perm.push(u);
        descend(masks, n, perm, used | 1 << u, cur, best);
        perm.pop();
    }
}

/// True iff swapping `u` and `w` is an automorphism: their neighborhoods agree
/// outside `{u, w}` and the `u`-`w` adjacency is symmetric by construction.
fn twins(masks: &[u32], u: usize, w: usize) -> bool {
    (masks[u] & !(1 << w)) == (masks[w] & !(1 << u))
}

/// Packs a bit-string into machine words for use as a hash key.
pub(crate) fn pack_bits(bits: &[bool]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}
