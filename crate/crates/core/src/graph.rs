//! Small simple undirected graphs stored as one neighborhood bitset per vertex.

use std::fmt;

use thiserror::Error;

/// Largest supported order: every neighborhood fits in one `u64`.
pub const MAX_ORDER: usize = 64;

/// A set of vertices encoded as a bitmask (bit `v` set iff `v` is a member).
pub type VertexSet = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("exact canonical labeling supports order at most {max}, got {order}")]
    CanonicalOrderExceeded { order: usize, max: usize },
}

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Immutable simple undirected graph.
///
/// `adj[u]` is the neighborhood of `u`. Symmetry and irreflexivity are checked
/// at construction; every operation that "modifies" a graph returns a new one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` gives the empty graph.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mask = low_bits(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if row & bit(u) != 0 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in members(row) {
                if adj[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for u in 0..n {
            g.adj[u] = all & !bit(u);
        }
        Ok(g)
    }

    /// Path on `n` vertices (`n − 1` edges).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with center 0 and `n − 1` leaves.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// `m − n`, the quantity preserved by pendant removal.
    pub fn excess(&self) -> i64 {
        self.size() as i64 - self.n as i64
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        low_bits(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Degrees sorted nonincreasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        if within & bit(start) == 0 {
            return 0;
        }
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reachable_within(0, self.vertex_set()) == self.vertex_set()
    }

    /// Cut vertices of a connected graph (Hopcroft–Tarjan low-link).
    pub fn articulation_points(&self) -> Result<VertexSet, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut: VertexSet = 0;
        let mut timer = 0usize;
        // (vertex, parent, unexplored neighbors, dfs children)
        let mut stack: Vec<(usize, usize, u64, usize)> = Vec::with_capacity(n);
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        stack.push((0, usize::MAX, self.adj[0], 0));
        while let Some(top) = stack.last_mut() {
            let (u, parent, rest, _) = *top;
            if rest != 0 {
                let v = rest.trailing_zeros() as usize;
                top.2 &= rest - 1;
                if disc[v] == usize::MAX {
                    top.3 += 1;
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, u, self.adj[v], 0));
                } else if v != parent {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                let (u, parent, _, children) = stack.pop().unwrap();
                if parent == usize::MAX {
                    if children >= 2 {
                        cut |= bit(u);
                    }
                } else {
                    low[parent] = low[parent].min(low[u]);
                    let grandparent = stack.last().map(|f| f.1).unwrap_or(usize::MAX);
                    if grandparent != usize::MAX && low[u] >= disc[parent] {
                        cut |= bit(parent);
                    }
                }
            }
        }
        Ok(cut)
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing vertex order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph, GraphError> {
        if set == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if set & !self.vertex_set() != 0 {
            let v = (set & !self.vertex_set()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.induced_unchecked(set))
    }

    /// Like [`Graph::induced_subgraph`] but allows the empty set.
    pub(crate) fn induced_unchecked(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| members(self.adj[v] & set).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// `G − v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertex_set() & !bit(v)))
    }

    /// `G` plus a new vertex `n` adjacent to `neighbors`.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        if self.n >= MAX_ORDER {
            return Err(GraphError::TooLarge(self.n + 1));
        }
        if neighbors & !self.vertex_set() != 0 {
            let v = (neighbors & !self.vertex_set()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for v in members(neighbors) {
            adj[v] |= bit(new);
        }
        adj.push(neighbors);
        Ok(Graph { n: new + 1, adj })
    }

    /// `G + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G − uv`; a missing edge is not an error.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << shift));
        Ok(Graph { n, adj })
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of `0..order()`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut inverse = [usize::MAX; MAX_ORDER];
        for (new, &old) in perm.iter().enumerate() {
            assert!(old < self.n && inverse[old] == usize::MAX, "not a permutation");
            inverse[old] = new;
        }
        let adj = perm
            .iter()
            .map(|&old| members(self.adj[old]).fold(0u64, |acc, w| acc | bit(inverse[w])))
            .collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
