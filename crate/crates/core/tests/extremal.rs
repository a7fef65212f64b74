mod common;

use cliquex_core::enumerate::labeled_classes;
use cliquex_core::extremal::{
    construct_b1, construct_b2, construct_bridge, construct_extremal_star, construct_krt, core_numbers,
    decompose_connected, decompose_erdos, erdos_bound, in_bridge_family, kernel, kernel_vertices, max_cliques_bound,
    peel_in_order, ExtremalError,
};
use cliquex_core::graph::members;
use cliquex_core::{connected_graphs, EnumerationTask, Graph};
use common::*;
use proptest::prelude::*;

fn vertex_mask(vs: &[usize]) -> u64 {
    vs.iter().map(|&v| 1u64 << v).sum()
}

#[test]
fn decomposition_is_unique_and_found() {
    for n in 1..=40u64 {
        for m in n - 1..=n * (n - 1) / 2 {
            let all = brute_decompositions(m, n);
            assert_eq!(all.len(), 1, "(m, n) = ({m}, {n}): {all:?}");
            let d = decompose_connected(m, n).unwrap();
            assert_eq!((d.r, d.t), all[0]);
        }
    }
    assert_eq!(decompose_connected(10, 7).map(|d| (d.r, d.t)), Ok((4, 2)));
}

#[test]
fn erdos_decomposition() {
    for m in 0..=300u64 {
        let d = decompose_erdos(m);
        assert!(d.t < d.r || (m == 0 && d.r == 0 || d.r == 1 && d.t == 0), "{m}: {d:?}");
        assert_eq!(binom(d.r, 2) + d.t, m);
        assert!(binom(d.r + 1, 2) > m);
    }
    assert_eq!((decompose_erdos(7).r, decompose_erdos(7).t), (4, 1));
    assert_eq!((decompose_erdos(10).r, decompose_erdos(10).t), (5, 0));
}

#[test]
fn erdos_bound_is_attained_on_six_vertices() {
    // The densest graphs with at most 15 edges fit on six vertices.
    let classes = labeled_classes(6, false, 2).unwrap();
    for s in [3u64, 4] {
        for m in 1..=15u64 {
            let best = classes[&(m as usize)].iter().map(|f| subset_cliques(&f.graph(), s as usize)).max().unwrap();
            assert_eq!(erdos_bound(m, s).unwrap(), best, "m = {m}, s = {s}");
        }
    }
    assert_eq!(erdos_bound(6, 3), Ok(4));
    assert_eq!(erdos_bound(7, 3), Ok(4));
}

#[test]
fn bound_values_and_errors() {
    assert_eq!(max_cliques_bound(10, 7, 3), Ok(5));
    assert_eq!(max_cliques_bound(6, 7, 3), Ok(0));
    assert_eq!(max_cliques_bound(21, 7, 4), Ok(35));
    assert!(matches!(max_cliques_bound(5, 7, 3), Err(ExtremalError::Infeasible { .. })));
    assert!(matches!(max_cliques_bound(10, 7, 2), Err(ExtremalError::CliqueOrderTooSmall(2))));
}

#[test]
fn bound_attained_by_the_star() {
    for n in 1..=12u64 {
        for m in n - 1..=n * (n - 1) / 2 {
            let g = construct_extremal_star(m, n).unwrap();
            assert!(g.is_connected());
            assert_eq!((g.order() as u64, g.size() as u64), (n, m));
            for s in 3..=5u64 {
                assert_eq!(subset_cliques(&g, s as usize), max_cliques_bound(m, n, s).unwrap(), "({m}, {n}, {s})");
            }
        }
    }
}

#[test]
fn star_for_ten_seven() {
    let g = construct_extremal_star(10, 7).unwrap();
    assert_eq!(subset_cliques(&g, 3), 5);
    let leaves: Vec<usize> = (0..7).filter(|&v| g.degree(v) == 1).collect();
    assert_eq!(leaves.len(), 2);
    let hub = (0..7).find(|&v| g.has_edge(v, leaves[0])).unwrap();
    assert!(g.has_edge(hub, leaves[1]));
    assert_eq!(g.degree(hub) - 2, 4);
    let core = g.induced_subgraph(vertex_mask(&naive_kernel(&g, 1))).unwrap();
    assert!(brute_isomorphic(&core, &construct_krt(4, 2).unwrap()));
    assert!(brute_isomorphic(&kernel(&g, 1), &core));
}

#[test]
fn bridge_constructions() {
    let b = construct_bridge(3, 3, 1).unwrap();
    assert_eq!((b.order(), b.size()), (6, 7));
    assert_eq!(brute_articulation(&b).len(), 2);
    assert!(in_bridge_family(&b, 3, 3).unwrap());
    assert!(!in_bridge_family(&construct_krt(4, 2).unwrap(), 4, 3).unwrap());
    assert!(construct_bridge(2, 3, 0).is_err());
}

#[test]
fn b1_b2_for_eleven_eight() {
    let (b1, b2) = (construct_b1(11, 8).unwrap(), construct_b2(11, 8).unwrap());
    for g in [&b1, &b2] {
        assert!(g.is_connected());
        assert_eq!((g.order(), g.size()), (8, 11));
        assert_eq!(subset_cliques(g, 3), 5);
    }
    let (w1, w2) = (matrix_traces(&b1, 7), matrix_traces(&b2, 7));
    assert_eq!(&w1[..4], &w2[..4]);
    assert!(w2[4] < w1[4]);
    assert!(matches!(construct_b1(10, 6), Err(ExtremalError::NotTwoCase { .. })));
    assert!(construct_b2(8, 5).is_err());
    assert_eq!(construct_b2(9, 6).unwrap().order(), 6);
}

#[test]
fn non_cut_vertex_of_low_degree() {
    // Holds for r ≥ 3; at r = 2 the 2-core may also be a cycle of length ≥ 4.
    let mut cycle_exceptions = 0;
    for n in 3..=8usize {
        for m in n..=n * (n - 1) / 2 {
            let r = decompose_connected(m as u64, n as u64).unwrap().r as usize;
            for g in connected_graphs(EnumerationTask::connected(n, m)).unwrap() {
                let core_vs = naive_kernel(&g, 1);
                let h = g.induced_subgraph(vertex_mask(&core_vs)).unwrap();
                let complete = h.order() == r + 1 && h.size() == (r + 1) * r / 2;
                let cut = brute_articulation(&h);
                let low = (0..h.order()).any(|u| !cut.contains(&u) && h.degree(u) < r);
                if !(complete || low) {
                    assert_eq!(r, 2, "{g:?}");
                    assert!(h.order() >= 4 && (0..h.order()).all(|u| h.degree(u) == 2), "{g:?}");
                    cycle_exceptions += 1;
                }
            }
        }
    }
    assert!(cycle_exceptions > 0);
}

#[test]
fn clique_free_band() {
    for n in 1..=8usize {
        for m in n - 1..=n * (n - 1) / 2 {
            for s in 3..=5usize {
                if (m as i64 - n as i64) > binom(s as u64, 2) as i64 - s as i64 - 1 {
                    continue;
                }
                for g in connected_graphs(EnumerationTask::connected(n, m)).unwrap() {
                    assert_eq!(subset_cliques(&g, s), 0);
                }
            }
        }
    }
}

#[test]
fn kernel_examples() {
    let g = construct_krt(4, 2).unwrap();
    assert_eq!(g.induced_subgraph(0b1111).unwrap(), Graph::complete(4).unwrap());
    assert_eq!(kernel(&g, 2), Graph::complete(4).unwrap());
    assert_eq!(core_numbers(&g), vec![3, 3, 3, 3, 2]);
    assert_eq!(kernel(&Graph::path(6).unwrap(), 1).order(), 0);
}

/// Vertices of `g` in breadth-first order from 0.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for v in members(g.neighbors(u)) {
            if !order.contains(&v) {
                order.push(v);
            }
        }
        i += 1;
    }
    order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kernel_matches_naive_peel(g in arb_graph(14), s in 0usize..6) {
        let expected = vertex_mask(&naive_kernel(&g, s));
        prop_assert_eq!(kernel_vertices(&g, s), expected);
        let reversed: Vec<usize> = (0..g.order()).rev().collect();
        prop_assert_eq!(peel_in_order(&g, s, &reversed), expected);
        let core = core_numbers(&g);
        prop_assert_eq!(members(expected).collect::<Vec<_>>(), (0..g.order()).filter(|&v| core[v] > s).collect::<Vec<_>>());
    }

    #[test]
    fn subgraph_kernels_stabilize(g in arb_connected(12), keep in any::<prop::sample::Index>()) {
        let order = bfs_order(&g);
        let kept = &order[..keep.index(order.len()) + 1];
        let h = g.induced_subgraph(vertex_mask(kept)).unwrap();
        let diff = g.excess() - h.excess();
        prop_assert!(diff >= 0);
        let mut sorted = kept.to_vec();
        sorted.sort_unstable();
        for s in diff as usize + 3..=diff as usize + 6 {
            let inner: Vec<usize> = naive_kernel(&h, s - 2).into_iter().map(|i| sorted[i]).collect();
            prop_assert_eq!(inner, naive_kernel(&g, s - 2));
        }
    }
}
