//! Spectral moments as exact closed-walk counts, the 4th-moment subgraph
//! formula, lexicographic S-order, and degree-sequence constructions over a
//! fixed 2-core.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::small_binomial;
use crate::extremal::kernel;
use crate::graph::{bit, members, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("closed walks up to length {j_max} on {n} vertices may exceed 128 bits")]
    Overflow { n: usize, j_max: usize },
    #[error("S-order compares graphs of equal order, got {0} and {1}")]
    OrderMismatch(usize, usize),
    #[error("kernel must be connected with minimum degree at least 2")]
    NotATwoCore,
    #[error("target order n = {n} must exceed the kernel order {k}")]
    OrderNotLarger { n: usize, k: usize },
    #[error("{len} targets given for n = {n}")]
    TargetLength { len: usize, n: usize },
    #[error("targets must be positive and nonincreasing")]
    NotNonincreasing,
    #[error("target degree sum {found} differs from the required {expected}")]
    SumMismatch { found: usize, expected: usize },
    #[error("target d[{index}] = {target} is below the kernel degree {kernel}")]
    NotDominating { index: usize, target: usize, kernel: usize },
    #[error("no target strictly exceeds its kernel degree")]
    NoStrictExcess,
    #[error("graph has an empty 2-core or no pendant trees")]
    NoPendantTrees,
    #[error("rank {rank} is not admissible (need 1 <= rank < {k} and d[rank] > kernel d[rank])")]
    InadmissibleRank { rank: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(S_0, …, S_{j_max})` where `S_j` counts closed walks of length `j`.
///
/// Ordering is lexicographic on the moments, which is the S-order when both
/// vectors come from graphs of the same order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MomentVector {
    moments: Vec<u128>,
}

impl MomentVector {
    pub fn as_slice(&self) -> &[u128] {
        &self.moments
    }

    pub fn get(&self, j: usize) -> Option<u128> {
        self.moments.get(j).copied()
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }
}

/// Exact `S_j = tr(A^j)` for `0 ≤ j ≤ j_max`, by repeated multiplication with
/// the 0/1 adjacency matrix in 128-bit integers.
pub fn spectral_moments(g: &Graph, j_max: usize) -> Result<MomentVector, SpectralError> {
    let n = g.order();
    let overflow = SpectralError::Overflow { n, j_max };
    if j_max > 63 {
        return Err(overflow);
    }
    // every entry of A^j is at most (n − 1)^j, so the trace is at most n (n − 1)^j
    (n.saturating_sub(1) as u128)
        .checked_pow(j_max as u32)
        .and_then(|p| p.checked_mul(n as u128))
        .ok_or(overflow)?;

    let mut walks = vec![0u128; n * n];
    for u in 0..n {
        walks[u * n + u] = 1;
    }
    let mut next = vec![0u128; n * n];
    let mut moments = Vec::with_capacity(j_max + 1);
    moments.push(n as u128);
    for _ in 1..=j_max {
        for u in 0..n {
            let row = &walks[u * n..(u + 1) * n];
            for v in 0..n {
                next[u * n + v] = members(g.neighbors(v)).map(|w| row[w]).sum();
            }
        }
        std::mem::swap(&mut walks, &mut next);
        moments.push((0..n).map(|u| walks[u * n + u]).sum());
    }
    Ok(MomentVector { moments })
}

/// Number of 4-cycle subgraphs, by direct enumeration of vertex 4-sets.
pub fn count_c4(g: &Graph) -> u64 {
    let n = g.order();
    let e = |u: usize, v: usize| g.neighbors(u) & bit(v) != 0;
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    count += u64::from(e(a, b) && e(b, c) && e(c, d) && e(d, a));
                    count += u64::from(e(a, b) && e(b, d) && e(d, c) && e(c, a));
                    count += u64::from(e(a, c) && e(c, b) && e(b, d) && e(d, a));
                }
            }
        }
    }
    count
}

/// `S_4 = 2·#edges + 4·#(2-edge paths) + 8·#(4-cycles)`.
pub fn s4_via_subgraphs(g: &Graph) -> u128 {
    let paths: u64 = (0..g.order()).map(|v| small_binomial(g.degree(v), 2)).sum();
    2 * g.size() as u128 + 4 * paths as u128 + 8 * count_c4(g) as u128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SOrder {
    Before,
    After,
    Equal,
}

/// Position of the first graph relative to the second in S-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SOrderResult {
    pub relation: SOrder,
    pub first_differing_index: Option<usize>,
}

/// Compares `(S_0, …, S_{n−1})` of two graphs of the same order.
pub fn s_order_compare(g1: &Graph, g2: &Graph) -> Result<SOrderResult, SpectralError> {
    if g1.order() != g2.order() {
        return Err(SpectralError::OrderMismatch(g1.order(), g2.order()));
    }
    let j_max = g1.order().saturating_sub(1);
    let a = spectral_moments(g1, j_max)?;
    let b = spectral_moments(g2, j_max)?;
    Ok(compare_moments(&a, &b))
}

pub fn compare_moments(a: &MomentVector, b: &MomentVector) -> SOrderResult {
    let first = a.moments.iter().zip(&b.moments).position(|(x, y)| x != y);
    match first {
        None => SOrderResult { relation: SOrder::Equal, first_differing_index: None },
        Some(j) => SOrderResult {
            relation: if a.moments[j] < b.moments[j] { SOrder::Before } else { SOrder::After },
            first_differing_index: Some(j),
        },
    }
}

/// Vertices of `h` by nonincreasing degree, ties by index.
fn by_degree(h: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by(|&a, &b| h.degree(b).cmp(&h.degree(a)).then(a.cmp(&b)));
    order
}

/// Builds a connected graph on `n` vertices with 2-core `h` and degree sequence
/// `targets`.
///
/// Kernel vertex `i` (by nonincreasing degree) receives `targets[i]`. A path
/// carrying the `s` targets beyond the kernel that are at least 2 hangs from the
/// first kernel vertex whose target exceeds its kernel degree; pendant edges
/// then make up every remaining deficit. Output labels: kernel `0..k`, path
/// `k..k+s`, pendants after.
pub fn realize_with_kernel(h: &Graph, targets: &[usize], n: usize) -> Result<Graph, SpectralError> {
    let k = h.order();
    if !h.is_connected() || h.min_degree().unwrap_or(0) < 2 {
        return Err(SpectralError::NotATwoCore);
    }
    if n <= k {
        return Err(SpectralError::OrderNotLarger { n, k });
    }
    if targets.len() != n {
        return Err(SpectralError::TargetLength { len: targets.len(), n });
    }
    if targets.windows(2).any(|w| w[0] < w[1]) || targets[n - 1] == 0 {
        return Err(SpectralError::NotNonincreasing);
    }
    let kernel_degrees = h.degree_sequence();
    let expected = kernel_degrees.iter().sum::<usize>() + 2 * (n - k);
    let found = targets.iter().sum();
    if found != expected {
        return Err(SpectralError::SumMismatch { found, expected });
    }
    if let Some(index) = (0..k).find(|&i| targets[i] < kernel_degrees[i]) {
        return Err(SpectralError::NotDominating { index, target: targets[index], kernel: kernel_degrees[index] });
    }
    let excess_at = (0..k).find(|&i| targets[i] > kernel_degrees[i]).ok_or(SpectralError::NoStrictExcess)?;

    let path_len = targets[k..].iter().take_while(|&&d| d >= 2).count();
    let mut g = h.relabel(&by_degree(h));
    for j in 0..path_len {
        let anchor = if j == 0 { excess_at } else { k + j - 1 };
        g = g.add_vertex(bit(anchor))?;
    }
    for (i, &target) in targets.iter().enumerate().take(k + path_len) {
        for _ in g.degree(i)..target {
            g = g.add_vertex(bit(i))?;
        }
    }
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// Ranks `i` (0-based positions in the nonincreasing degree sequence, `1 ≤ i < k`)
/// at which the degree exceeds the 2-core degree, i.e. where a transformation applies.
pub fn transformation_ranks(g: &Graph) -> Vec<usize> {
    let core = kernel(g, 1);
    let k = core.order();
    if k == 0 || k >= g.order() {
        return Vec::new();
    }
    let d = g.degree_sequence();
    let dbar = core.degree_sequence();
    (1..k).filter(|&i| d[i] > dbar[i]).collect()
}

/// Moves one unit of degree from rank `rank` to the top rank and realizes the
/// result over the same 2-core. Order, size and 2-core are preserved while
/// `S_4` strictly increases.
pub fn d_transformation(g: &Graph, rank: usize) -> Result<Graph, SpectralError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let core = kernel(g, 1);
    let (k, n) = (core.order(), g.order());
    if k == 0 || k >= n {
        return Err(SpectralError::NoPendantTrees);
    }
    let mut d = g.degree_sequence();
    let dbar = core.degree_sequence();
    if rank == 0 || rank >= k || d[rank] <= dbar[rank] {
        return Err(SpectralError::InadmissibleRank { rank, k });
    }
    d[0] += 1;
    d[rank] -= 1;
    d.sort_unstable_by(|a, b| b.cmp(a));
    realize_with_kernel(&core, &d, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::cliques::k as cliques;

    #[test]
    fn c4_moments() {
        let m = spectral_moments(&Graph::cycle(4).unwrap(), 6).unwrap();
        // eigenvalues 2, 0, 0, −2: S_j = 2·2^j for even j
        assert_eq!(m.as_slice(), &[4, 0, 8, 0, 32, 0, 128]);
    }

    #[test]
    fn low_moments() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let m = spectral_moments(&g, 3).unwrap();
        assert_eq!(m.as_slice(), &[5, 0, 10, 6 * cliques(&g, 3) as u128]);
    }

    #[test]
    fn overflow_guard() {
        assert!(spectral_moments(&Graph::complete(64).unwrap(), 63).is_err());
        assert!(spectral_moments(&Graph::complete(2).unwrap(), 64).is_err());
        assert!(spectral_moments(&Graph::complete(64).unwrap(), 20).is_ok());
    }

    #[test]
    fn four_cycles() {
        assert_eq!(count_c4(&Graph::complete(4).unwrap()), 3);
        assert_eq!(count_c4(&Graph::cycle(4).unwrap()), 1);
        assert_eq!(count_c4(&Graph::cycle(5).unwrap()), 0);
    }

    #[test]
    fn s4_formula_examples() {
        assert_eq!(s4_via_subgraphs(&Graph::star(4).unwrap()), 18);
        assert_eq!(s4_via_subgraphs(&Graph::cycle(4).unwrap()), 32);
    }

    #[test]
    fn s_order() {
        let c4 = Graph::cycle(4).unwrap();
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = s_order_compare(&c4, &paw).unwrap();
        assert_eq!(r, SOrderResult { relation: SOrder::Before, first_differing_index: Some(3) });
        let r = s_order_compare(&paw, &c4).unwrap();
        assert_eq!(r.relation, SOrder::After);
        let r = s_order_compare(&c4, &c4).unwrap();
        assert_eq!(r, SOrderResult { relation: SOrder::Equal, first_differing_index: None });
        assert_eq!(
            s_order_compare(&c4, &Graph::cycle(5).unwrap()),
            Err(SpectralError::OrderMismatch(4, 5))
        );
    }

    #[test]
    fn realization_examples() {
        let k3 = Graph::complete(3).unwrap();
        let g = realize_with_kernel(&k3, &[4, 2, 2, 1, 1], 5).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 1, 1]);
        assert!(is_isomorphic(&kernel(&g, 1), &k3).unwrap());

        let g = realize_with_kernel(&k3, &[3, 3, 2, 1, 1], 5).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 3, 2, 1, 1]);
        assert!(is_isomorphic(&kernel(&g, 1), &k3).unwrap());

        // a path of two degree-2 vertices hanging off the kernel
        let g = realize_with_kernel(&k3, &[3, 2, 2, 2, 2, 1], 6).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 2, 2, 1]);
        assert!(is_isomorphic(&kernel(&g, 1), &k3).unwrap());
        assert!(g.is_connected());
    }

    #[test]
    fn realization_errors() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            realize_with_kernel(&k3, &[4, 2, 2, 2, 1], 5),
            Err(SpectralError::SumMismatch { found: 11, expected: 10 })
        );
        assert_eq!(realize_with_kernel(&k3, &[2, 2, 2], 3), Err(SpectralError::OrderNotLarger { n: 3, k: 3 }));
        assert_eq!(realize_with_kernel(&k3, &[2, 2, 2, 2], 5), Err(SpectralError::TargetLength { len: 4, n: 5 }));
        assert_eq!(realize_with_kernel(&k3, &[2, 3, 3, 1, 1], 5), Err(SpectralError::NotNonincreasing));
        assert_eq!(realize_with_kernel(&Graph::path(3).unwrap(), &[3, 2, 1, 1, 1], 5), Err(SpectralError::NotATwoCore));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            realize_with_kernel(&c4, &[6, 3, 2, 1, 1, 1, 1, 1], 8),
            Err(SpectralError::NotDominating { index: 3, target: 1, kernel: 2 })
        );
    }

    #[test]
    fn transformation_raises_s4() {
        // K4 with a pendant on two different clique vertices
        let g = Graph::complete(4).unwrap().add_vertex(bit(0)).unwrap().add_vertex(bit(1)).unwrap();
        assert_eq!(transformation_ranks(&g), vec![1]);
        let h = d_transformation(&g, 1).unwrap();
        assert_eq!((h.order(), h.size()), (6, 8));
        assert_eq!(h.degree_sequence(), vec![5, 3, 3, 3, 1, 1]);
        assert!(s4_via_subgraphs(&h) > s4_via_subgraphs(&g));
        assert_eq!(cliques(&h, 3), cliques(&g, 3));
        assert!(d_transformation(&g, 2).is_err());
        assert!(d_transformation(&Graph::path(4).unwrap(), 1).is_err());
    }
}
