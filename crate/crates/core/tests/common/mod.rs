//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the library routine it checks.

#![allow(dead_code)]

use cliquex_core::Graph;
use proptest::prelude::*;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// `s`-cliques by scanning every vertex subset of size `s`.
pub fn subset_cliques(g: &Graph, s: usize) -> u64 {
    let n = g.order();
    let mut count = 0;
    let mut subset: Vec<usize> = (0..s).collect();
    if s == 0 {
        return 1;
    }
    if s > n {
        return 0;
    }
    loop {
        if subset.iter().enumerate().all(|(i, &u)| subset[i + 1..].iter().all(|&v| g.has_edge(u, v))) {
            count += 1;
        }
        // next combination in lexicographic order
        let mut i = s;
        while i > 0 && subset[i - 1] == n - s + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return count;
        }
        subset[i - 1] += 1;
        for j in i..s {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Closed walks of each length `0..=j_max`, counted by walking them one step at a time.
pub fn closed_walks_dfs(g: &Graph, j_max: usize) -> Vec<u128> {
    fn walk(g: &Graph, start: usize, at: usize, left: usize, tally: &mut [u128], len: usize) {
        if at == start {
            tally[len] += 1;
        }
        if left == 0 {
            return;
        }
        for next in 0..g.order() {
            if g.has_edge(at, next) {
                walk(g, start, next, left - 1, tally, len + 1);
            }
        }
    }
    let mut tally = vec![0u128; j_max + 1];
    for v in 0..g.order() {
        walk(g, v, v, j_max, &mut tally, 0);
    }
    tally
}

/// Traces of powers of a dense adjacency matrix.
pub fn matrix_traces(g: &Graph, j_max: usize) -> Vec<u128> {
    let n = g.order();
    let a: Vec<Vec<u128>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v) as u128).collect()).collect();
    let mut p: Vec<Vec<u128>> = (0..n).map(|u| (0..n).map(|v| (u == v) as u128).collect()).collect();
    let mut out = vec![n as u128];
    for _ in 0..j_max {
        p = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| p[i][k] * a[k][j]).sum()).collect()).collect();
        out.push((0..n).map(|i| p[i][i]).sum());
    }
    out
}

/// Connectivity of `g` with the vertices in `removed` deleted, by depth-first search.
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..g.order()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &alive {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn brute_articulation(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| !connected_without(g, &[v])).collect()
}

/// Every `(r, t)` with `m − n = C(r−1, 2) + t − 2` and `2 ≤ t ≤ r`
/// (or the tree pair `(1, 1)` when `m = n − 1`).
pub fn brute_decompositions(m: u64, n: u64) -> Vec<(u64, u64)> {
    let excess = m as i64 - n as i64;
    if excess == -1 {
        return vec![(1, 1)];
    }
    let mut out = Vec::new();
    for r in 2..=n + 2 {
        for t in 2..=r {
            if binom(r - 1, 2) as i64 + t as i64 - 2 == excess {
                out.push((r, t));
            }
        }
    }
    out
}

/// The vertices left after deleting, one at a time, any vertex of degree ≤ `s`.
pub fn naive_kernel(g: &Graph, s: usize) -> Vec<usize> {
    let mut alive: Vec<bool> = vec![true; g.order()];
    loop {
        let degree = |u: usize, alive: &[bool]| (0..g.order()).filter(|&v| alive[v] && g.has_edge(u, v)).count();
        match (0..g.order()).find(|&u| alive[u] && degree(u, &alive) <= s) {
            Some(u) => alive[u] = false,
            None => return (0..g.order()).filter(|&u| alive[u]).collect(),
        }
    }
}

/// Whether some bijection maps `g` onto `h`, by trying all of them.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == g.order() {
            return true;
        }
        for x in 0..h.order() {
            if used[x] || (0..u).any(|w| g.has_edge(u, w) != h.has_edge(x, map[w])) {
                continue;
            }
            used[x] = true;
            map.push(x);
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[x] = false;
        }
        false
    }
    g.order() == h.order() && g.size() == h.size() && extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A random tree on `0..n` (vertex `v` hangs below a random earlier vertex)
/// plus arbitrary extra edges.
pub fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let mut g = graph_from_bits(n, &bits);
                for (i, p) in parents.iter().enumerate() {
                    let v = i + 1;
                    g = g.with_edge(p.index(v), v).unwrap();
                }
                g
            })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
