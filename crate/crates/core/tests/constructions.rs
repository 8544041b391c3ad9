mod common;

use std::collections::BTreeSet;

use turan_core::combinatorics::for_each_subset;
use turan_core::constructions::{b_rec, build, ConstructionSpec};
use turan_core::enumerate::enumerate_free;
use turan_core::{Family, NamedGraph};

use common::{b_rec_exhaustive, brute_free};

#[test]
fn dp_matches_exhaustive_recursion() {
    for n in 0..=20 {
        assert_eq!(b_rec(n).value, b_rec_exhaustive(n), "n={n}");
    }
}

#[test]
fn built_size_matches_value_and_is_monotone() {
    let mut last = 0;
    for n in 0..=60 {
        let opt = b_rec(n);
        assert!(opt.splits.iter().sum::<usize>() + 2 >= n);
        let g = build(&ConstructionSpec::BRec { n, splits: opt.splits }).unwrap();
        assert_eq!(g.edge_count() as u128, opt.value);
        assert!(opt.value >= last);
        last = opt.value;
    }
}

#[test]
fn brec_is_free() {
    let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
    for n in 4..=16 {
        let g = build(&ConstructionSpec::brec_optimal(n)).unwrap();
        assert!(fam.scan_free(&g), "n={n}");
        assert!(fam.is_free(&g), "n={n}");
    }
    let g = build(&ConstructionSpec::brec_optimal(8)).unwrap();
    assert!(brute_free(&g, &fam));
}

#[test]
fn blow_ups_are_free() {
    let partite = Family::named(&[NamedGraph::F32, NamedGraph::C5_3Minus]);
    for k in 1..=6 {
        let g = build(&ConstructionSpec::Partite3([k, k, k])).unwrap();
        assert!(partite.scan_free(&g), "k={k}");
    }
    let k4 = Family::from_key("F32,induced:F32_BAR").unwrap();
    for k in 1..=4 {
        let g = build(&ConstructionSpec::K4Blowup([k, k, k, k])).unwrap();
        assert!(k4.scan_free(&g), "k={k}");
        assert!(k4.is_free(&g), "k={k}");
    }
}

#[test]
fn free_graphs_have_sparse_five_sets() {
    let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
    for n in 5..=6 {
        for g in enumerate_free(n, &fam).unwrap() {
            for_each_subset(n, 5, |s| assert!(g.edges_within(s) <= 6, "{g:?} on {s:?}"));
        }
    }
    // Six edges is attained.
    let sixes: BTreeSet<usize> = enumerate_free(5, &fam).unwrap().iter().map(|g| g.edge_count()).collect();
    assert_eq!(sixes.last(), Some(&6));
}
