//! Matching counts and the matching polynomial, by two independent
//! algorithms: direct enumeration over edge subsets, and the vertex-deletion
//! recurrence with an isomorphism-collapsing memo table.

use crate::canon::{canonical_bits, pack_bits};
use crate::graph::{Graph, VertexSet};
use crate::poly::{IntPolynomial, IntegralityReport};
use num_bigint::{BigInt, BigUint};
use std::collections::HashMap;

/// Exact matching counts `m(G, r)` for `r = 0..=n/2`; `m(G, 0) = 1` and
/// `m(G, 1)` is the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchVector {
    /// Order of the source graph.
    pub n: usize,
    /// `counts[r]` = number of r-edge matchings.
    pub counts: Vec<BigUint>,
}

impl MatchVector {
    /// Assembles the matching polynomial: the signed sum with the coefficient
    /// of `x^(n-2r)` equal to `(-1)^r m(G, r)`.
    pub fn polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.n + 1];
        for (r, count) in self.counts.iter().enumerate() {
            let c = BigInt::from(count.clone());
            coeffs[self.n - 2 * r] = if r % 2 == 0 { c } else { -c };
        }
        IntPolynomial::new(coeffs)
    }
}

use num_traits::Zero;

/// Counts all matchings of `g` by recursive enumeration: branch on the
/// lowest-indexed usable edge, exclude or include, endpoints of included
/// edges blocked. Deterministic lexicographic edge order.
pub fn count_matchings(g: &Graph) -> MatchVector {
    let n = g.n();
    let max_r = n / 2;
    let mut counts = vec![0u128; max_r + 1];
    counts[0] = 1;
    let edges = g.edges();
    let mut used = vec![0u64; n.div_ceil(64).max(1)];
    count_rec(&edges, 0, 0, max_r, &mut used, &mut counts);
    MatchVector {
        n,
        counts: counts.into_iter().map(BigUint::from).collect(),
    }
}

fn count_rec(
    edges: &[(usize, usize)],
    start: usize,
    size: usize,
    max_r: usize,
    used: &mut [u64],
    counts: &mut [u128],
) {
    if size == max_r {
        return; // no room for another edge
    }
    for i in start..edges.len() {
        let (u, v) = edges[i];
        if (used[u / 64] >> (u % 64) | used[v / 64] >> (v % 64)) & 1 == 1 {
            continue;
        }
        counts[size + 1] += 1;
        used[u / 64] |= 1 << (u % 64);
        used[v / 64] |= 1 << (v % 64);
        count_rec(edges, i + 1, size + 1, max_r, used, counts);
        used[u / 64] &= !(1 << (u % 64));
        used[v / 64] &= !(1 << (v % 64));
    }
}

/// Matching polynomial via direct enumeration (the oracle path).
pub fn matching_polynomial(g: &Graph) -> IntPolynomial {
    count_matchings(g).polynomial()
}

/// Subgraphs up to this order get an isomorphism-collapsing canonical memo
/// key; larger ones are keyed on their exact labeled bit-string.
const CANON_KEY_MAX: usize = 10;

type BitsKey = (usize, Vec<u64>);

/// Memo table for [`matching_polynomial_recurrence_with`]. Reusable across
/// calls; wrap in a `Mutex` to share between threads.
#[derive(Debug, Default)]
pub struct MuCache {
    labeled: HashMap<BitsKey, IntPolynomial>,
    canonical: HashMap<BitsKey, IntPolynomial>,
}

/// Matching polynomial via the vertex recurrence
/// `mu(G) = x mu(G-u) - sum over v adjacent to u of mu(G-u-v)`,
/// pivoting on a maximum-degree vertex, with a fresh memo table.
pub fn matching_polynomial_recurrence(g: &Graph) -> IntPolynomial {
    let mut cache = MuCache::default();
    matching_polynomial_recurrence_with(g, &mut cache)
}

/// Recurrence with a caller-owned memo table.
pub fn matching_polynomial_recurrence_with(g: &Graph, cache: &mut MuCache) -> IntPolynomial {
    let n = g.n();
    if n == 0 {
        return IntPolynomial::one();
    }
    let labeled_key = (n, pack_bits(&g.upper_triangle_bits()));
    if let Some(p) = cache.labeled.get(&labeled_key) {
        return p.clone();
    }
    let canon_key = (n <= CANON_KEY_MAX).then(|| (n, pack_bits(&canonical_bits(g))));
    if let Some(key) = &canon_key {
        if let Some(p) = cache.canonical.get(key) {
            let p = p.clone();
            cache.labeled.insert(labeled_key, p.clone());
            return p;
        }
    }
    let pivot = g.max_degree_vertex().expect("nonempty graph");
    let minus_pivot = g.delete_vertex(pivot).expect("pivot in range");
    let mut mu = matching_polynomial_recurrence_with(&minus_pivot, cache).shift(1);
    for &v in g.neighbors(pivot) {
        let minus_pair = g
            .delete_vertices(&VertexSet::from([pivot, v]))
            .expect("pair in range");
        mu = &mu - &matching_polynomial_recurrence_with(&minus_pair, cache);
    }
    if let Some(key) = canon_key {
        cache.canonical.insert(key, mu.clone());
    }
    cache.labeled.insert(labeled_key, mu.clone());
    mu
}

/// Decides matching integrality: computes the matching polynomial by the
/// recurrence and divides out integer zeros up to `n - 1` (all zeros of a
/// matching polynomial are below the largest adjacency eigenvalue, hence
/// below `n - 1` in magnitude).
pub fn is_matching_integral(g: &Graph) -> (bool, IntegralityReport) {
    let mu = matching_polynomial_recurrence(g);
    let bound = g.n().saturating_sub(1) as u64;
    let report = mu
        .extract_integer_zeros(bound)
        .expect("matching polynomial is monic, hence nonzero");
    (report.integral, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_f7, build_hk, build_hk_prime};
    use num_traits::One;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use std::collections::BTreeMap;

    fn counts_u64(g: &Graph) -> Vec<u64> {
        count_matchings(g)
            .counts
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn count_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(counts_u64(&k2), vec![1, 1]);

        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(counts_u64(&p3), vec![1, 2]);

        let h1 = build_hk(1).unwrap();
        assert_eq!(counts_u64(&h1), vec![1, 14, 49, 36, 0]);
    }

    #[test]
    fn polynomial_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(matching_polynomial(&k2), IntPolynomial::from_i64(&[-1, 0, 1]));

        assert_eq!(
            matching_polynomial(&build_f7()),
            IntPolynomial::from_i64(&[0, -36, 0, 49, 0, -14, 0, 1])
        );

        assert_eq!(
            matching_polynomial(&build_hk(1).unwrap()),
            IntPolynomial::from_i64(&[0, 0, -36, 0, 49, 0, -14, 0, 1])
        );
    }

    #[test]
    fn recurrence_base_and_small_cases() {
        assert_eq!(
            matching_polynomial_recurrence(&Graph::empty(0)),
            IntPolynomial::one()
        );
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            matching_polynomial_recurrence(&p3),
            IntPolynomial::from_i64(&[0, -2, 0, 1])
        );
    }

    #[test]
    fn recurrence_h2_matches_closed_counts() {
        // m-vector [1, 29, 244, 576, 0, 0, 0] on 13 vertices
        let h2 = build_hk(2).unwrap();
        assert_eq!(counts_u64(&h2), vec![1, 29, 244, 576, 0, 0, 0]);
        let mu = matching_polynomial_recurrence(&h2);
        assert_eq!(mu, matching_polynomial(&h2));
        let inner = IntPolynomial::from_i64(&[-576, 0, 244, 0, -29, 0, 1]);
        assert_eq!(mu, inner.shift(7));
    }

    #[test]
    fn integrality_examples() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (ok, rep) = is_matching_integral(&star);
        assert!(ok);
        assert_eq!(rep.zeros, BTreeMap::from([(0, 3), (2, 1), (-2, 1)]));

        let k3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (ok, rep) = is_matching_integral(&k3);
        assert!(!ok);
        assert_eq!(rep.remainder, IntPolynomial::from_i64(&[-3, 0, 1]));

        let (ok, rep) = is_matching_integral(&build_hk_prime(2).unwrap());
        assert!(ok);
        assert_eq!(
            rep.zeros,
            BTreeMap::from([(0, 2), (1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1)])
        );
    }

    #[test]
    fn parity_and_sign_pattern() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let mv = count_matchings(&g);
        let mu = mv.polynomial();
        assert_eq!(mu.degree(), Some(6));
        assert!(mu.coeffs().last().unwrap().is_one());
        for e in 0..=6usize {
            let c = mu.coeff(e);
            if e % 2 != 0 {
                assert!(c.is_zero(), "odd-exponent coefficient nonzero at {e}");
            }
        }
        assert!(mu.coeff(5).is_zero());
        for (r, count) in mv.counts.iter().enumerate() {
            let expected = BigInt::from(count.clone());
            let expected = if r % 2 == 0 { expected } else { -expected };
            assert_eq!(mu.coeff(6 - 2 * r), expected);
        }
    }

    #[test]
    fn zero_bound_of_n_minus_1_is_sound() {
        // the n-1 search bound and a 10n bound give identical reports on the
        // exhaustive small-graph suite
        for n in 1..=7usize {
            for g in crate::search::generate_small_graphs(n).unwrap() {
                let mu = matching_polynomial_recurrence(&g);
                let tight = mu.extract_integer_zeros((n - 1) as u64).unwrap();
                let wide = mu.extract_integer_zeros(10 * n as u64).unwrap();
                assert_eq!(tight, wide);
                assert_eq!(tight.reconstruct(), mu);
            }
        }
    }

    #[test]
    fn shared_cache_gives_identical_results() {
        let mut cache = MuCache::default();
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let a1 = matching_polynomial_recurrence_with(&g, &mut cache);
        let b1 = matching_polynomial_recurrence_with(&h, &mut cache);
        assert_eq!(a1, matching_polynomial_recurrence(&g));
        assert_eq!(b1, matching_polynomial_recurrence(&h));
    }

    proptest! {
        #[test]
        fn oracle_equivalence_random(n in 0usize..9, seed: u64) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = crate::search::random_graph(n, 0.5, &mut rng);
            prop_assert_eq!(matching_polynomial(&g), matching_polynomial_recurrence(&g));
        }

        #[test]
        fn multiplicative_over_disjoint_union(na in 0usize..6, nb in 0usize..6, seed: u64) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = crate::search::random_graph(na, 0.5, &mut rng);
            let b = crate::search::random_graph(nb, 0.5, &mut rng);
            let u = a.disjoint_union(&b);
            prop_assert_eq!(
                matching_polynomial(&u),
                &matching_polynomial(&a) * &matching_polynomial(&b)
            );
        }
    }
}
