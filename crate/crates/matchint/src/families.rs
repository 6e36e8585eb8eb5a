//! The built-in graph families: H_k, H'_k, and the 7-vertex 3-connected
//! matching-integral graph, together with their closed-form matching
//! polynomials and a construction-vs-formula verifier.
//!
//! H_k: core {a, b, c} with edge bc, attachment pair {p, q} joined to {a, b},
//! and an independent set of k(k+2) vertices each joined to all of {a, b, c}.
//! H'_k: same core, a single pendant at a, and an independent set of k^2
//! vertices joined to all of {a, b, c}.
//!
//! Vertex labels: a=0, b=1, c=2, then p(=3), q(=4) where present, then the
//! independent set ascending, so graph6 output is stable.

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::matching::matching_polynomial_recurrence;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameter k must be at least 1, got {k}")]
    KOutOfRange { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Hk,
    HkPrime,
    F7,
}

/// Parameterized family selector; `k` is ignored for `F7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub k: usize,
}

impl FamilySpec {
    fn check(&self) -> Result<(), FamilyError> {
        match self.kind {
            FamilyKind::F7 => Ok(()),
            _ if self.k >= 1 => Ok(()),
            _ => Err(FamilyError::KOutOfRange { k: self.k }),
        }
    }
}

/// H_k on k(k+2)+5 vertices with 3k(k+2)+5 edges.
pub fn build_hk(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::KOutOfRange { k });
    }
    let big = k * (k + 2);
    let n = big + 5;
    let mut edges = vec![(1, 2), (3, 0), (3, 1), (4, 0), (4, 1)];
    for r in 5..n {
        edges.extend([(r, 0), (r, 1), (r, 2)]);
    }
    Ok(Graph::new(n, &edges).expect("construction is in range"))
}

/// H'_k on k^2+4 vertices with 3k^2+2 edges; vertex 3 is the pendant.
pub fn build_hk_prime(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::KOutOfRange { k });
    }
    let n = k * k + 4;
    let mut edges = vec![(1, 2), (3, 0)];
    for r in 4..n {
        edges.extend([(r, 0), (r, 1), (r, 2)]);
    }
    Ok(Graph::new(n, &edges).expect("construction is in range"))
}

/// The 7-vertex 3-connected matching-integral graph: edge pairs {0,1} and
/// {5,6}, middle triple {2,3,4}, all pair-to-middle edges present.
pub fn build_f7() -> Graph {
    let mut edges = vec![(0, 1), (5, 6)];
    for m in 2..5 {
        edges.extend([(0, m), (1, m), (m, 5), (m, 6)]);
    }
    Graph::new(7, &edges).expect("construction is in range")
}

/// `x^2 - c^2`
fn quad(c: usize) -> IntPolynomial {
    let c = BigInt::from(c as u64);
    IntPolynomial::new(vec![-(&c * &c), BigInt::from(0), BigInt::from(1)])
}

/// The closed-form matching polynomial of the selected family member, fully
/// expanded:
/// H_k:  x^(k(k+2)-1) (x^2-k^2)(x^2-(k+1)^2)(x^2-(k+2)^2)
/// H'_k: x^(k^2-2) (x^2-(k-1)^2)(x^2-k^2)(x^2-(k+1)^2) for k >= 2, and the
///       expanded product x(x^2-1)(x^2-4) for k = 1
/// F7:   x^7 - 14x^5 + 49x^3 - 36x
pub fn expected_mu(spec: &FamilySpec) -> Result<IntPolynomial, FamilyError> {
    spec.check()?;
    let k = spec.k;
    Ok(match spec.kind {
        FamilyKind::Hk => {
            let even = &(&quad(k) * &quad(k + 1)) * &quad(k + 2);
            even.shift(k * (k + 2) - 1)
        }
        FamilyKind::HkPrime => {
            if k == 1 {
                (&quad(1) * &quad(2)).shift(1)
            } else {
                let even = &(&quad(k - 1) * &quad(k)) * &quad(k + 1);
                even.shift(k * k - 2)
            }
        }
        FamilyKind::F7 => IntPolynomial::from_i64(&[0, -36, 0, 49, 0, -14, 0, 1]),
    })
}

/// Outcome of checking one family member: construction, recurrence-computed
/// polynomial, closed form, and the member's connectivity claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// Short-form graph6, absent when the member exceeds 62 vertices.
    pub graph6: Option<String>,
    pub n: usize,
    pub edge_count: usize,
    pub computed_mu: IntPolynomial,
    pub expected_mu: IntPolynomial,
    /// Computed equals expected, coefficient-wise.
    pub matches: bool,
    /// H_k: 2-connected. H'_k: has a cut vertex, and minus the pendant is
    /// 3-connected when k >= 2. F7: 3-connected.
    pub connectivity_claim_holds: bool,
}

impl FamilyReport {
    pub fn to_json_string(&self) -> String {
        let graph6 = match &self.graph6 {
            Some(s) => format!("\"{}\"", crate::json_escape(s)),
            None => "null".into(),
        };
        format!(
            "{{\"graph6\":{},\"n\":{},\"edge_count\":{},\"computed_mu\":{},\"expected_mu\":{},\"match\":{},\"connectivity_claim_holds\":{}}}",
            graph6,
            self.n,
            self.edge_count,
            self.computed_mu.to_json_string(),
            self.expected_mu.to_json_string(),
            self.matches,
            self.connectivity_claim_holds,
        )
    }
}

/// Builds the member, computes its matching polynomial by the recurrence, and
/// compares against the closed form and the connectivity claim.
pub fn verify_family(spec: &FamilySpec) -> Result<FamilyReport, FamilyError> {
    spec.check()?;
    let graph = match spec.kind {
        FamilyKind::Hk => build_hk(spec.k)?,
        FamilyKind::HkPrime => build_hk_prime(spec.k)?,
        FamilyKind::F7 => build_f7(),
    };
    let computed = matching_polynomial_recurrence(&graph);
    let expected = expected_mu(spec)?;
    let connectivity_claim_holds = match spec.kind {
        FamilyKind::Hk => graph.vertex_connectivity_at_least(2),
        FamilyKind::HkPrime => {
            let minus_pendant = graph.delete_vertex(3).expect("pendant is vertex 3");
            graph.has_cut_vertex()
                && (spec.k < 2 || minus_pendant.vertex_connectivity_at_least(3))
        }
        FamilyKind::F7 => graph.vertex_connectivity_at_least(3),
    };
    Ok(FamilyReport {
        graph6: to_graph6(&graph).ok(),
        n: graph.n(),
        edge_count: graph.edge_count(),
        matches: computed == expected,
        computed_mu: computed,
        expected_mu: expected,
        connectivity_claim_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{count_matchings, is_matching_integral};
    use std::collections::BTreeMap;

    #[test]
    fn hk_sizes() {
        let h1 = build_hk(1).unwrap();
        assert_eq!((h1.n(), h1.edge_count()), (8, 14));
        let h2 = build_hk(2).unwrap();
        assert_eq!((h2.n(), h2.edge_count()), (13, 29));
        assert_eq!(build_hk(0), Err(FamilyError::KOutOfRange { k: 0 }));
    }

    #[test]
    fn hk_minus_independent_vertex() {
        // removing one degree-3 independent-set vertex drops 3 edges
        let h1 = build_hk(1).unwrap();
        let g = h1.delete_vertex(5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 11));
    }

    #[test]
    fn hk_prime_sizes_and_cut_vertex() {
        let g = build_hk_prime(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 14));
        assert!(g.has_cut_vertex());
        // a (= vertex 0) is the unique cut vertex
        let cuts: Vec<usize> = (0..g.n())
            .filter(|&v| !g.delete_vertex(v).unwrap().is_connected())
            .collect();
        assert_eq!(cuts, vec![0]);
        assert_eq!(build_hk_prime(0), Err(FamilyError::KOutOfRange { k: 0 }));
    }

    #[test]
    fn hk_prime_k1_polynomial() {
        let g = build_hk_prime(1).unwrap();
        assert_eq!(g.n(), 5);
        let mu = count_matchings(&g).polynomial();
        assert_eq!(mu, IntPolynomial::from_i64(&[0, 4, 0, -5, 0, 1]));
        assert_eq!(
            mu,
            expected_mu(&FamilySpec {
                kind: FamilyKind::HkPrime,
                k: 1
            })
            .unwrap()
        );
    }

    #[test]
    fn f7_properties() {
        let f7 = build_f7();
        assert_eq!((f7.n(), f7.edge_count()), (7, 14));
        assert!(f7.vertex_connectivity_at_least(3));
        let (ok, rep) = is_matching_integral(&f7);
        assert!(ok);
        assert_eq!(
            rep.zeros,
            BTreeMap::from([(-3, 1), (-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn expected_mu_examples() {
        let hk1 = expected_mu(&FamilySpec {
            kind: FamilyKind::Hk,
            k: 1,
        })
        .unwrap();
        assert_eq!(
            hk1,
            IntPolynomial::from_i64(&[0, 0, -36, 0, 49, 0, -14, 0, 1])
        );
        let hkp2 = expected_mu(&FamilySpec {
            kind: FamilyKind::HkPrime,
            k: 2,
        })
        .unwrap();
        assert_eq!(hk1, hkp2);
        let f7 = expected_mu(&FamilySpec {
            kind: FamilyKind::F7,
            k: 0,
        })
        .unwrap();
        assert_eq!(f7.to_string(), "x^7 - 14*x^5 + 49*x^3 - 36*x");
    }

    #[test]
    fn verify_family_reports() {
        for spec in [
            FamilySpec {
                kind: FamilyKind::Hk,
                k: 3,
            },
            FamilySpec {
                kind: FamilyKind::HkPrime,
                k: 3,
            },
            FamilySpec {
                kind: FamilyKind::F7,
                k: 0,
            },
        ] {
            let report = verify_family(&spec).unwrap();
            assert!(report.matches, "{spec:?}");
            assert!(report.connectivity_claim_holds, "{spec:?}");
        }
        let hk3 = verify_family(&FamilySpec {
            kind: FamilyKind::Hk,
            k: 3,
        })
        .unwrap();
        assert_eq!(hk3.n, 20);
    }

    #[test]
    fn cospectral_mates_are_not_isomorphic() {
        let h1 = build_hk(1).unwrap();
        let hp2 = build_hk_prime(2).unwrap();
        assert_eq!(
            matching_polynomial_recurrence(&h1),
            matching_polynomial_recurrence(&hp2)
        );
        assert_ne!(h1.degree_multiset(), hp2.degree_multiset());
    }

    #[test]
    fn report_json_shape() {
        let report = verify_family(&FamilySpec {
            kind: FamilyKind::F7,
            k: 0,
        })
        .unwrap();
        let json = report.to_json_string();
        assert!(json.starts_with("{\"graph6\":\""));
        assert!(json.contains("\"match\":true"));
    }
}
