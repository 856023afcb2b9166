mod common;

use std::collections::BTreeSet;

use common::*;
use dipebble::digraph::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn invariants_survive_relabelling((g, perm) in arb_digraph(7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_permutation(n))
    })) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(strong_diameter(&g), strong_diameter(&h));
        prop_assert_eq!(g.arc_count(), h.arc_count());
        prop_assert_eq!(g.is_oriented(), h.is_oriented());
        if g.n() >= 2 {
            prop_assert_eq!(strong_connectivity(&g).unwrap(), strong_connectivity(&h).unwrap());
        }
    }

    #[test]
    fn canonical_labeling_realises_the_form(g in arb_digraph(8)) {
        let (form, perm) = canonical_labeling(&g).unwrap();
        prop_assert_eq!(g.permute(&perm).unwrap(), form.to_digraph().unwrap());
        prop_assert_eq!(CanonicalForm::from_hex(&form.to_hex()).unwrap(), form);
    }

    #[test]
    fn connectivity_matches_vertex_cut_search(g in arb_digraph(5).prop_filter("n >= 2", |g| g.n() >= 2)) {
        prop_assert_eq!(strong_connectivity(&g).unwrap(), brute_connectivity(&g));
    }

    #[test]
    fn bfs_matches_relaxation_and_oracle(g in arb_digraph(8)) {
        let bfs_m = DistanceMatrix::new(&g);
        let fw = distance_matrix_relaxation(&g);
        prop_assert_eq!(&bfs_m, &fw);
        for s in 0..g.n() {
            let d = bfs(&g, s);
            for (t, &want) in d.iter().enumerate() {
                prop_assert_eq!(bfs_m.get(s, t), want);
            }
        }
        let worst = (0..g.n())
            .flat_map(|s| bfs(&g, s))
            .try_fold(0, |m, d| d.map(|d| m.max(d)));
        prop_assert_eq!(strong_diameter(&g), worst);
    }

    #[test]
    fn graph_file_round_trip(g in arb_digraph(9)) {
        prop_assert_eq!(parse_digraph(&g.to_graph_file()).unwrap(), g);
    }

    #[test]
    fn oriented_generator_is_oriented(g in arb_oriented(7)) {
        prop_assert!(is_oriented(&g));
    }
}

#[test]
fn distinct_graphs_get_distinct_forms() {
    // all labelled digraphs on 3 vertices: 64 graphs, 16 classes
    let pairs: Vec<(usize, usize)> = (0..3)
        .flat_map(|u| (0..3).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    let mut forms = BTreeSet::new();
    for mask in 0u32..64 {
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a);
        forms.insert(canonical_form(&Digraph::from_arcs(3, arcs).unwrap()).unwrap());
    }
    assert_eq!(forms.len(), 16);
}

#[test]
fn enumeration_counts_and_uniqueness() {
    let oriented = [1, 2, 7, 42, 582];
    let general = [1, 3, 16, 218];
    for (i, &want) in oriented.iter().enumerate() {
        let classes = enumerate_digraphs(i + 1, true, false, |_| true).unwrap();
        assert_eq!(classes.len(), want, "oriented n = {}", i + 1);
        check_classes(&classes);
    }
    for (i, &want) in general.iter().enumerate() {
        let classes = enumerate_digraphs(i + 1, false, false, |_| true).unwrap();
        assert_eq!(classes.len(), want, "general n = {}", i + 1);
        check_classes(&classes);
    }
}

fn check_classes(classes: &[GraphClass]) {
    let forms: BTreeSet<_> = classes.iter().map(|c| c.form.clone()).collect();
    assert_eq!(forms.len(), classes.len());
    assert!(classes.windows(2).all(|w| w[0].form < w[1].form));
    for c in classes {
        assert_eq!(canonical_form(&c.graph).unwrap(), c.form);
    }
}

#[test]
fn enumeration_predicate_filters_classes() {
    let strong = enumerate_digraphs(3, false, false, Digraph::is_strongly_connected).unwrap();
    assert_eq!(strong.len(), 5);
    let all = enumerate_digraphs(3, false, false, |_| true).unwrap();
    let count = all
        .iter()
        .filter(|c| c.graph.is_strongly_connected())
        .count();
    assert_eq!(count, strong.len());
}

#[test]
fn enumeration_order_limits() {
    assert!(enumerate_digraphs(7, true, false, |_| true).is_err());
    assert!(enumerate_digraphs(8, true, true, |_| true).is_err());
    assert!(enumerate_digraphs(0, true, false, |_| true).is_err());
}

#[test]
fn malformed_graph_files() {
    for bad in [
        "",
        "{\"n\":3}",
        "{\"n\":3,\"arcs\":[[0,0]]}",
        "{\"n\":3,\"arcs\":[[0,3]]}",
        "{\"n\":3,\"arcs\":[[0,1],[0,1]]}",
        "{\"n\":3,\"arcs\":[[0,1]],\"extra\":1}",
    ] {
        assert!(parse_digraph(bad).is_err(), "{bad}");
    }
}

#[test]
fn known_values() {
    let c3 = Digraph::directed_cycle(3).unwrap();
    assert_eq!(strong_diameter(&c3), Some(2));
    assert_eq!(strong_connectivity(&c3).unwrap(), 1);
    let k4 = Digraph::complete_bidirected(4).unwrap();
    assert_eq!(strong_connectivity(&k4).unwrap(), 3);
    assert_eq!(strong_diameter(&k4), Some(1));
    let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(strong_diameter(&path), None);
    assert_eq!(strong_connectivity(&path).unwrap(), 0);
}
