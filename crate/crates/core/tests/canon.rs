mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use turan_core::{CanonKey, Hypergraph3};

use common::{brute_canon, labeled_graphs};

#[test]
fn keys_match_brute_force_classes() {
    for n in 0..=5 {
        let mut by_form = BTreeMap::new();
        let mut by_key = BTreeMap::new();
        for g in labeled_graphs(n) {
            let form = brute_canon(&g);
            let key = g.canon_key().clone();
            assert_eq!(by_form.entry(form.clone()).or_insert_with(|| key.clone()), &key, "n={n} {g:?}");
            assert_eq!(by_key.entry(key).or_insert(form.clone()), &form, "n={n} {g:?}");
        }
        assert_eq!(by_form.len(), [1, 1, 1, 2, 5, 34][n]);
    }
}

#[test]
fn hex_round_trip() {
    for g in labeled_graphs(4) {
        let key = g.canon_key();
        let back = CanonKey::from_hex(&key.to_hex()).unwrap();
        assert_eq!(&back, key);
        assert!(back.to_graph().unwrap().is_isomorphic(&g));
    }
}

fn graph_and_perm() -> impl Strategy<Value = (Hypergraph3, Vec<u32>)> {
    (6usize..=7).prop_flat_map(|n| {
        let triples = common::all_triples(n);
        let len = triples.len();
        (
            proptest::collection::vec(any::<bool>(), len),
            Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(keep, perm)| {
                let edges = triples.iter().zip(&keep).filter(|(_, &k)| k).map(|(t, _)| *t);
                (Hypergraph3::from_edges(n, edges).unwrap(), perm)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn keys_are_permutation_invariant((g, perm) in graph_and_perm()) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canon_key(), h.canon_key());
        prop_assert!(g.is_isomorphic(&h));
        prop_assert_eq!(g.canonical_form().0, h.canonical_form().0);
        let (gc, hc) = (g.complement(), h.complement());
        prop_assert_eq!(gc.canon_key(), hc.canon_key());
    }
}
