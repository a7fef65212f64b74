mod common;

use std::collections::BTreeSet;

use cliquex_core::enumerate::labeled_classes;
use cliquex_core::{
    canonical_form, class_fold, connected_graphs, construct_extremal_star, to_graph6, EnumerationTask, Reduce,
};
use common::*;

fn class(task: EnumerationTask) -> Vec<String> {
    connected_graphs(task).unwrap().map(|g| to_graph6(&g)).collect()
}

#[test]
fn connected_graph_totals() {
    // connected graphs on n unlabeled vertices
    let known = [1usize, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &total) in known.iter().enumerate() {
        let n = i + 1;
        let found: usize = (n - 1..=n * (n - 1) / 2).map(|m| class(EnumerationTask::connected(n, m)).len()).sum();
        assert_eq!(found, total, "n = {n}");
    }
}

#[test]
fn augmentation_matches_labeled_scan() {
    for n in 1..=6 {
        let labeled = labeled_classes(n, true, 3).unwrap();
        for m in n - 1..=n * (n - 1) / 2 {
            let ours: BTreeSet<_> =
                connected_graphs(EnumerationTask::connected(n, m)).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
            assert_eq!(ours, labeled[&m], "(n, m) = ({n}, {m})");
        }
    }
}

#[test]
fn classes_are_independent_of_worker_count() {
    for n in 1..=7 {
        for m in n - 1..=n * (n - 1) / 2 {
            let mut single = class(EnumerationTask::connected(n, m));
            single.sort();
            for workers in [2, 4, 8] {
                let mut joined: Vec<String> = (0..workers)
                    .flat_map(|w| class(EnumerationTask::connected(n, m).with_partition(w, workers)))
                    .collect();
                joined.sort();
                assert_eq!(joined, single, "(n, m, workers) = ({n}, {m}, {workers})");
            }
        }
    }
}

#[test]
fn emitted_graphs_are_canonical_connected_and_sized() {
    for m in 6..=21 {
        for g in connected_graphs(EnumerationTask::connected(7, m)).unwrap() {
            assert!(connected_without(&g, &[]));
            assert_eq!((g.order(), g.size()), (7, m));
            assert_eq!(canonical_form(&g).unwrap().as_graph6(), to_graph6(&g));
        }
    }
}

#[test]
fn small_classes() {
    assert_eq!(class(EnumerationTask::connected(3, 2)).len(), 1);
    assert_eq!(class(EnumerationTask::connected(5, 10)), vec![to_graph6(&cliquex_core::Graph::complete(5).unwrap())]);
}

#[test]
fn fold_examples() {
    let f = class_fold(7, 10, 2, |g| subset_cliques(g, 3), Reduce::ArgmaxSet).unwrap();
    assert_eq!(f.value, 5);
    let star = canonical_form(&construct_extremal_star(10, 7).unwrap()).unwrap();
    assert!(f.witnesses.iter().any(|g| canonical_form(g).unwrap() == star));
    let trees = class_fold(6, 5, 1, |g| subset_cliques(g, 3), Reduce::ArgmaxSet).unwrap();
    assert_eq!((trees.value, trees.witnesses.len()), (0, 6));
}
