//! Canonical forms by pruned exhaustive labeling search.
//!
//! The canonical code of a graph is the lexicographically smallest upper-triangle
//! adjacency string (graph6 column order) over all labelings that list vertices
//! in nondecreasing `(color, degree)` order. Columns are fixed one position at a
//! time, so at each position only the candidates producing the smallest column
//! can lead to the minimum. Interchangeable twins (`N(u) − v = N(v) − u`) are
//! tried once, since swapping them is an automorphism fixing everything placed.

use std::fmt;

use crate::format::to_graph6;
use crate::graph::{bit, members, Graph, GraphError, VertexSet};

/// Largest order accepted by the exact canonicalizer.
pub const MAX_CANONICAL_ORDER: usize = 12;

/// Relabeling-invariant encoding: the graph6 record of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    code: String,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.code.as_bytes()
    }

    /// The code as a graph6 record.
    pub fn as_graph6(&self) -> &str {
        &self.code
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        crate::format::from_graph6(&self.code).expect("canonical code is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.code)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Cell index for each position.
    cell_of_position: Vec<usize>,
    /// Vertices of each cell.
    cells: Vec<VertexSet>,
    lab: Vec<usize>,
    cols: Vec<u64>,
    best_lab: Vec<usize>,
    best_cols: Vec<u64>,
    have_best: bool,
    /// Length of the common prefix of `cols` and `best_cols`.
    agree: usize,
}

impl Search<'_> {
    fn column(&self, v: usize, p: usize) -> u64 {
        let nb = self.g.neighbors(v);
        let mut c = 0u64;
        for (q, &u) in self.lab[..p].iter().enumerate() {
            if nb & bit(u) != 0 {
                c |= 1 << (p - 1 - q);
            }
        }
        c
    }

    fn run(&mut self, p: usize, placed: VertexSet) {
        if p == self.n {
            if !self.have_best || self.agree < self.n {
                self.best_lab.copy_from_slice(&self.lab);
                self.best_cols.copy_from_slice(&self.cols);
                self.have_best = true;
            }
            self.agree = self.n;
            return;
        }
        let avail = self.cells[self.cell_of_position[p]] & !placed;
        let mut min_col = u64::MAX;
        let mut chosen: VertexSet = 0;
        for v in members(avail) {
            let c = self.column(v, p);
            if c < min_col {
                min_col = c;
                chosen = bit(v);
            } else if c == min_col {
                chosen |= bit(v);
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in members(chosen) {
            let nv = self.g.neighbors(v);
            if tried.iter().any(|&u| nv & !bit(u) == self.g.neighbors(u) & !bit(v)) {
                continue;
            }
            tried.push(v);
            self.agree = self.agree.min(p);
            if self.have_best && self.agree == p {
                match min_col.cmp(&self.best_cols[p]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Equal => self.agree = p + 1,
                    std::cmp::Ordering::Less => {}
                }
            }
            self.lab[p] = v;
            self.cols[p] = min_col;
            self.run(p + 1, placed | bit(v));
        }
    }
}

/// Canonical labeling respecting a vertex coloring: `lab[position] = vertex`.
///
/// Vertices are grouped by `(colors[v], degree(v))` in increasing order; two
/// colored graphs receive the same relabeling iff they are color-isomorphic.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(GraphError::CanonicalOrderExceeded { order: n, max: MAX_CANONICAL_ORDER });
    }
    assert_eq!(colors.len(), n, "one color per vertex");
    let mut keys: Vec<(u32, usize)> = (0..n).map(|v| (colors[v], g.degree(v))).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut cells = vec![0u64; keys.len()];
    for (v, &c) in colors.iter().enumerate() {
        let k = keys.binary_search(&(c, g.degree(v))).unwrap();
        cells[k] |= bit(v);
    }
    let cell_of_position = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.count_ones() as usize))
        .collect();
    let mut search = Search {
        g,
        n,
        cell_of_position,
        cells,
        lab: vec![0; n],
        cols: vec![0; n],
        best_lab: vec![0; n],
        best_cols: vec![0; n],
        have_best: false,
        agree: 0,
    };
    search.run(0, 0);
    Ok(search.best_lab)
}

pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    canonical_labeling_colored(g, &vec![0; g.order()])
}

/// `g` relabeled canonically.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(g.relabel(&canonical_labeling(g)?))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    Ok(CanonicalForm { code: to_graph6(&canonical_graph(g)?) })
}

/// Canonical code of `g` with `v` individualized (placed first).
pub(crate) fn rooted_code(g: &Graph, v: usize) -> Result<String, GraphError> {
    let mut colors = vec![1u32; g.order()];
    colors[v] = 0;
    let lab = canonical_labeling_colored(g, &colors)?;
    Ok(to_graph6(&g.relabel(&lab)))
}

/// True iff some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    if u == v {
        return Ok(true);
    }
    if g.degree(u) != g.degree(v) {
        return Ok(false);
    }
    Ok(rooted_code(g, u)? == rooted_code(g, v)?)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
