//! Property tests: every writer's output parses back to the same value.

use proptest::prelude::*;
use turan::format::certificate::{certificate_to_string, parse_certificate};
use turan::format::graph::{enumeration_to_string, graph_to_string, parse_enumeration, parse_graph};
use turan_core::certificate::{CertBlock, Certificate};
use turan_core::linalg::SymMatrix;
use turan_core::numeric::ratio;
use turan_core::{Hypergraph3, Rational};

fn graph() -> impl Strategy<Value = Hypergraph3> {
    (0usize..9).prop_flat_map(|n| {
        let triples = (n * n.saturating_sub(1) * n.saturating_sub(2) / 6).max(1);
        proptest::collection::vec(any::<bool>(), triples).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for c in 0..n as u32 {
                for b in 0..c {
                    for a in 0..b {
                        if bits[k] {
                            edges.push([a, b, c]);
                        }
                        k += 1;
                    }
                }
            }
            Hypergraph3::from_edges(n, edges).unwrap()
        })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..500).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #[test]
    fn graphs(g in graph()) {
        prop_assert_eq!(parse_graph(&graph_to_string(&g)).unwrap(), g);
    }

    #[test]
    fn enumerations(gs in proptest::collection::vec(graph(), 0..6)) {
        prop_assert_eq!(parse_enumeration(&enumeration_to_string(&gs)).unwrap(), gs);
    }

    #[test]
    fn certificates(
        bound in rational(),
        dim in 0usize..4,
        values in proptest::collection::vec(rational(), 10),
        slacks in proptest::collection::btree_map(0usize..40, rational(), 0..8),
    ) {
        let sigma = Hypergraph3::empty(1).canonical_form().0;
        let upper = &values[..dim * (dim + 1) / 2];
        let cert = Certificate {
            bound,
            family_key: "C4_3,induced:F5_BAR".into(),
            m: 5,
            blocks: vec![CertBlock { sigma, flag_size: 3, matrix: SymMatrix::from_upper(dim, upper).unwrap() }],
            slacks,
        };
        prop_assert_eq!(parse_certificate(&certificate_to_string(&cert)).unwrap(), cert);
    }
}
