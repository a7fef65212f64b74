//! Decompositions of `m` and `m − n`, the clique bounds they drive, kernel
//! peeling, and constructors for the extremal families.

use thiserror::Error;

use crate::arith::{binomial, max_r_choose2_le};
use crate::canon::is_isomorphic;
use crate::graph::{bit, members, Graph, GraphError, VertexSet, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("no connected graph has order {n} and size {m} (need n - 1 <= m <= C(n, 2))")]
    Infeasible { m: u64, n: u64 },
    #[error("clique order s = {0} is below 3")]
    CliqueOrderTooSmall(u64),
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter { name: &'static str, value: u64, reason: &'static str },
    #[error("(m, n) = ({m}, {n}) decomposes with t = {t}; this family needs t = 2 and r >= 3")]
    NotTwoCase { m: u64, n: u64, t: u64 },
    #[error("bound does not fit in 64 bits")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(r, t)` with `m − n = C(r − 1, 2) + t − 2`, `2 ≤ t ≤ r` (or `r = t = 1` for trees).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConnectedDecomposition {
    pub r: u64,
    pub t: u64,
}

/// `(r, t)` with `m = C(r, 2) + t` and `0 ≤ t < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ErdosDecomposition {
    pub r: u64,
    pub t: u64,
}

fn choose2(x: u64) -> u128 {
    x as u128 * (x as u128).saturating_sub(1) / 2
}

fn feasible(m: u64, n: u64) -> bool {
    n >= 1 && m + 1 >= n && (m as u128) <= choose2(n)
}

pub fn decompose_connected(m: u64, n: u64) -> Result<ConnectedDecomposition, ExtremalError> {
    if !feasible(m, n) {
        return Err(ExtremalError::Infeasible { m, n });
    }
    if m + 1 == n {
        return Ok(ConnectedDecomposition { r: 1, t: 1 });
    }
    let excess = m - n;
    let r = max_r_choose2_le(excess) + 1;
    let t = excess - choose2(r - 1) as u64 + 2;
    debug_assert!((2..=r).contains(&t));
    Ok(ConnectedDecomposition { r, t })
}

pub fn decompose_erdos(m: u64) -> ErdosDecomposition {
    let r = max_r_choose2_le(m);
    ErdosDecomposition { r, t: m - choose2(r) as u64 }
}

fn clique_bound(r: u64, t: u64, s: u64) -> Result<u64, ExtremalError> {
    let a = binomial(r, s).ok_or(ExtremalError::Overflow)?;
    let b = binomial(t, s - 1).ok_or(ExtremalError::Overflow)?;
    a.checked_add(b).ok_or(ExtremalError::Overflow)
}

/// Maximum of `k_s` over connected graphs of size `m` and order `n`:
/// `C(r, s) + C(t, s − 1)` for the connected decomposition of `(m, n)`.
pub fn max_cliques_bound(m: u64, n: u64, s: u64) -> Result<u64, ExtremalError> {
    if s < 3 {
        return Err(ExtremalError::CliqueOrderTooSmall(s));
    }
    let d = decompose_connected(m, n)?;
    clique_bound(d.r, d.t, s)
}

/// Bound over all graphs of size `m`, connected or not.
pub fn erdos_bound(m: u64, s: u64) -> Result<u64, ExtremalError> {
    if s < 3 {
        return Err(ExtremalError::CliqueOrderTooSmall(s));
    }
    let d = decompose_erdos(m);
    clique_bound(d.r, d.t, s)
}

/// Core number of every vertex, by bucket-queue peeling in nondecreasing degree.
pub fn core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    // bin[d] = start of degree-d block in `order`
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    let mut next = bin.clone();
    for v in 0..n {
        pos[v] = next[degree[v]];
        order[pos[v]] = v;
        next[degree[v]] += 1;
    }
    for i in 0..n {
        let v = order[i];
        for u in members(g.neighbors(v)) {
            if degree[u] > degree[v] {
                // move u to the front of its block, then shrink the block
                let du = degree[u];
                let front = bin[du];
                let w = order[front];
                if w != u {
                    order.swap(front, pos[u]);
                    pos[w] = pos[u];
                    pos[u] = front;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    degree
}

/// Vertices of `G^s`: those surviving iterated deletion of degree ≤ `s` vertices.
pub fn kernel_vertices(g: &Graph, s: usize) -> VertexSet {
    core_numbers(g)
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > s)
        .fold(0, |acc, (v, _)| acc | bit(v))
}

/// `G^s`, the `(s + 1)`-core; the empty graph when nothing survives.
pub fn kernel(g: &Graph, s: usize) -> Graph {
    g.induced_unchecked(kernel_vertices(g, s))
}

/// Peels by repeatedly deleting the first vertex of `order` whose current degree
/// is at most `s`. Any deletion order reaches the same survivor set.
///
/// # Panics
/// Panics if `order` is not a permutation of the vertices.
pub fn peel_in_order(g: &Graph, s: usize, order: &[usize]) -> VertexSet {
    assert_eq!(order.len(), g.order());
    let mut alive = g.vertex_set();
    'outer: loop {
        for &v in order {
            if alive & bit(v) != 0 && (g.neighbors(v) & alive).count_ones() as usize <= s {
                alive &= !bit(v);
                continue 'outer;
            }
        }
        return alive;
    }
}

fn check_order(n: u64) -> Result<usize, ExtremalError> {
    if n > MAX_ORDER as u64 {
        Err(GraphError::TooLarge(n as usize).into())
    } else {
        Ok(n as usize)
    }
}

/// `K_r^t`: `K_r` on `0..r` plus vertex `r` joined to `0..t`.
pub fn construct_krt(r: u64, t: u64) -> Result<Graph, ExtremalError> {
    if t < 1 || t > r {
        return Err(ExtremalError::InvalidParameter { name: "t", value: t, reason: "need 1 <= t <= r" });
    }
    let r = check_order(r + 1)? - 1;
    let mut edges: Vec<(usize, usize)> = (0..r).flat_map(|u| (u + 1..r).map(move |v| (u, v))).collect();
    edges.extend((0..t as usize).map(|u| (u, r)));
    Ok(Graph::from_edges(r + 1, &edges)?)
}

/// `K_r^t` for the decomposition of `(m, n)` with `n − r − 1` pendants on vertex 0,
/// a clique vertex of degree `r` adjacent to the extra vertex.
pub fn construct_extremal_star(m: u64, n: u64) -> Result<Graph, ExtremalError> {
    let d = decompose_connected(m, n)?;
    let n = check_order(n)?;
    if n == 1 {
        return Ok(Graph::complete(1)?);
    }
    let mut g = construct_krt(d.r, d.t)?;
    while g.order() < n {
        g = g.add_vertex(bit(0))?;
    }
    debug_assert_eq!(g.size() as u64, m);
    Ok(g)
}

/// A member of `𝔹(p, q)`: `K_p` on `0..p` and a `q`-cycle joined by a path with
/// `len` edges from vertex 0. `len = 0` identifies vertex 0 with a cycle vertex.
pub fn construct_bridge(p: u64, q: u64, len: u64) -> Result<Graph, ExtremalError> {
    if p < 3 {
        return Err(ExtremalError::InvalidParameter { name: "p", value: p, reason: "need p >= 3" });
    }
    if q < 3 {
        return Err(ExtremalError::InvalidParameter { name: "q", value: q, reason: "need q >= 3" });
    }
    let order = check_order(p + q + len - 1)?;
    let (p, q, len) = (p as usize, q as usize, len as usize);
    let mut edges: Vec<(usize, usize)> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
    // path 0 = a_0, a_1, …, a_len where a_len is the cycle's first vertex
    let mut prev = 0;
    let mut next = p;
    for _ in 0..len {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    let cycle: Vec<usize> = std::iter::once(prev).chain(next..next + q - 1).collect();
    for i in 0..q {
        edges.push((cycle[i], cycle[(i + 1) % q]));
    }
    debug_assert_eq!(next + q - 1, order);
    Ok(Graph::from_edges(order, &edges)?)
}

/// Whether `g` is isomorphic to some member of `𝔹(p, q)`. The order fixes the path length.
pub fn in_bridge_family(g: &Graph, p: u64, q: u64) -> Result<bool, ExtremalError> {
    let n = g.order() as u64;
    if p < 3 || q < 3 || n + 1 < p + q {
        return Ok(false);
    }
    let member = construct_bridge(p, q, n + 1 - p - q)?;
    Ok(is_isomorphic(g, &member)?)
}

fn two_case(m: u64, n: u64) -> Result<ConnectedDecomposition, ExtremalError> {
    let d = decompose_connected(m, n)?;
    if d.t != 2 || d.r < 3 {
        return Err(ExtremalError::NotTwoCase { m, n, t: d.t });
    }
    Ok(d)
}

/// `B₁`: the pendant star over `K_r^2`.
pub fn construct_b1(m: u64, n: u64) -> Result<Graph, ExtremalError> {
    two_case(m, n)?;
    construct_extremal_star(m, n)
}

/// `B₂`: `B(r, 3)` with every pendant on the identified cut vertex.
pub fn construct_b2(m: u64, n: u64) -> Result<Graph, ExtremalError> {
    let d = two_case(m, n)?;
    if n < d.r + 2 {
        return Err(ExtremalError::InvalidParameter {
            name: "n",
            value: n,
            reason: "B(r, 3) alone already has r + 2 vertices",
        });
    }
    let n = check_order(n)?;
    let mut g = construct_bridge(d.r, 3, 0)?;
    while g.order() < n {
        g = g.add_vertex(bit(0))?;
    }
    debug_assert_eq!(g.size() as u64, m);
    Ok(g)
}
