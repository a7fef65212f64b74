//! Exact s-clique counting on bitset adjacency.

use crate::arith::small_binomial;
use crate::graph::{members, Graph, GraphError, VertexSet};

/// Number of `s`-cliques of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueCount {
    pub s: usize,
    pub count: u64,
}

#[inline]
fn above(v: usize) -> VertexSet {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Counts `s`-subsets of `candidates` that are cliques, extending only upward in
/// vertex index so each clique is reached once.
fn count_within(g: &Graph, candidates: VertexSet, s: usize) -> u64 {
    match s {
        0 => 1,
        1 => candidates.count_ones() as u64,
        2 => members(candidates)
            .map(|v| (g.neighbors(v) & candidates & above(v)).count_ones() as u64)
            .sum(),
        _ => {
            let mut total = 0;
            let mut rest = candidates;
            while rest.count_ones() as usize >= s {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next = rest & g.neighbors(v);
                if next.count_ones() as usize >= s - 1 {
                    total += count_within(g, next, s - 1);
                }
            }
            total
        }
    }
}

/// `k_s(G)`: the number of vertex subsets of size `s` inducing a complete graph.
/// `k_0 = 1` (the empty clique) and `k_s = 0` for `s > n`.
pub fn count_s_cliques(g: &Graph, s: usize) -> CliqueCount {
    let count = count_within(g, g.vertex_set(), s);
    debug_assert!(count <= small_binomial(g.order(), s));
    CliqueCount { s, count }
}

/// Shorthand for `count_s_cliques(g, s).count`.
pub fn k(g: &Graph, s: usize) -> u64 {
    count_s_cliques(g, s).count
}

/// Both sides of `k_s(G) = k_s(G − v) + k_{s−1}(G[N(v)])`.
///
/// # Panics
/// Panics if `s == 0`.
pub fn deletion_identity_check(g: &Graph, v: usize, s: usize) -> Result<(u64, u64), GraphError> {
    assert!(s >= 1, "clique order must be at least 1");
    let without = g.remove_vertex(v)?;
    let link = match g.neighbors(v) {
        0 => u64::from(s == 1),
        nb => k(&g.induced_subgraph(nb)?, s - 1),
    };
    Ok((k(g, s), k(&without, s) + link))
}
