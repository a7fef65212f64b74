//! Isomorph-free generation of connected graphs of given order and size.
//!
//! Canonical augmentation: a node on `k` vertices is extended by a new vertex
//! joined to a nonempty subset of its vertices. A child is kept only when the
//! new vertex lies in the orbit of the child's designated vertex: the non-cut
//! vertex of minimum degree with the largest canonical position. Every connected
//! graph then has exactly one parent class (itself minus its designated vertex),
//! and isomorphic siblings are merged per parent. Nodes are stored canonically
//! relabeled, so emitted graphs are their own canonical representatives.
//!
//! A labeled brute force over all `2^C(n,2)` graphs with canonical-form dedup
//! is kept as an independent oracle for small orders.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::arith::small_binomial;
use crate::canon::{canonical_form, canonical_labeling, rooted_code, CanonicalForm};
use crate::graph::{bit, low_bits, members, Graph, GraphError};

/// Largest order for exhaustive generation.
pub const MAX_ENUMERATION_ORDER: usize = 9;
/// Largest order for the labeled brute-force oracle.
pub const MAX_LABELED_ORDER: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {n} is outside the exhaustive range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("no {kind} graph has order {n} and size {m}")]
    Infeasible { n: usize, m: usize, kind: &'static str },
    #[error("worker {index} of {count} is not a valid partition")]
    InvalidPartition { index: usize, count: usize },
    #[error("the class of order {n} and size {m} is empty")]
    EmptyClass { n: usize, m: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One worker's share of the graphs with order `n` and size `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub m: usize,
    pub connected_only: bool,
    pub worker_index: usize,
    pub worker_count: usize,
}

impl EnumerationTask {
    /// Connected graphs, single worker.
    pub fn connected(n: usize, m: usize) -> Self {
        EnumerationTask { n, m, connected_only: true, worker_index: 0, worker_count: 1 }
    }

    pub fn with_partition(self, worker_index: usize, worker_count: usize) -> Self {
        EnumerationTask { worker_index, worker_count, ..self }
    }

    fn validate(&self) -> Result<(), EnumerationError> {
        let max = if self.connected_only { MAX_ENUMERATION_ORDER } else { MAX_LABELED_ORDER };
        if self.n == 0 || self.n > max {
            return Err(EnumerationError::OrderOutOfRange { n: self.n, max });
        }
        let top = small_binomial(self.n, 2) as usize;
        let low = if self.connected_only { self.n - 1 } else { 0 };
        if self.m < low || self.m > top {
            let kind = if self.connected_only { "connected" } else { "simple" };
            return Err(EnumerationError::Infeasible { n: self.n, m: self.m, kind });
        }
        if self.worker_count == 0 || self.worker_index >= self.worker_count {
            return Err(EnumerationError::InvalidPartition { index: self.worker_index, count: self.worker_count });
        }
        Ok(())
    }
}

/// Tree level whose nodes are dealt round-robin to workers.
fn split_level(n: usize) -> usize {
    n.min(n.saturating_sub(2).clamp(3, 6))
}

/// Pull-based stream of canonical representatives, one per isomorphism class.
pub struct ConnectedGraphs {
    n: usize,
    m: usize,
    split: usize,
    worker_index: usize,
    worker_count: usize,
    split_seen: usize,
    stack: Vec<Graph>,
    labeled: std::vec::IntoIter<Graph>,
}

impl ConnectedGraphs {
    /// Whether a node with `k` vertices and `e` edges can still reach `(n, m)`.
    fn reachable(&self, k: usize, e: usize) -> bool {
        // each added vertex brings between 1 and (current order) edges
        let max_more = (k..self.n).sum::<usize>();
        e + (self.n - k) <= self.m && e + max_more >= self.m
    }

    fn children(&self, parent: &Graph) -> Vec<Graph> {
        let k = parent.order();
        let e = parent.size();
        let mut seen: HashSet<Graph> = HashSet::new();
        let mut out = Vec::new();
        for subset in 1..=low_bits(k) {
            let added = subset.count_ones() as usize;
            if !self.reachable(k + 1, e + added) {
                continue;
            }
            let child = parent.add_vertex(subset).expect("order stays within bounds");
            if let Some(canon) = accept(&child, k) {
                if seen.insert(canon.clone()) {
                    out.push(canon);
                }
            }
        }
        out
    }
}

/// Canonical relabeling of `child` if `new_vertex` is in the designated orbit.
fn accept(child: &Graph, new_vertex: usize) -> Option<Graph> {
    let cut = child.articulation_points().expect("children of connected graphs are connected");
    let non_cut = child.vertex_set() & !cut;
    let min_deg = members(non_cut).map(|v| child.degree(v)).min()?;
    if child.degree(new_vertex) != min_deg {
        return None;
    }
    let lab = canonical_labeling(child).expect("enumeration orders are canonicalizable");
    let designated = lab
        .iter()
        .rev()
        .copied()
        .find(|&v| non_cut & bit(v) != 0 && child.degree(v) == min_deg)
        .expect("a minimum-degree non-cut vertex exists");
    if designated != new_vertex {
        let rooted = rooted_code(child, new_vertex).expect("canonicalizable");
        if rooted != rooted_code(child, designated).expect("canonicalizable") {
            return None;
        }
    }
    Some(child.relabel(&lab))
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.labeled.next() {
            return Some(g);
        }
        while let Some(node) = self.stack.pop() {
            let k = node.order();
            if k == self.split {
                let mine = self.split_seen % self.worker_count == self.worker_index;
                self.split_seen += 1;
                if !mine {
                    continue;
                }
            }
            if k == self.n {
                if node.size() == self.m {
                    return Some(node);
                }
                continue;
            }
            let mut kids = self.children(&node);
            kids.reverse();
            self.stack.extend(kids);
        }
        None
    }
}

/// Streams one canonical representative per isomorphism class of graphs with
/// order `task.n` and size `task.m`, restricted to this worker's share.
///
/// Connected classes come from canonical augmentation. With `connected_only`
/// unset the labeled brute force is used instead (orders up to 7).
pub fn connected_graphs(task: EnumerationTask) -> Result<ConnectedGraphs, EnumerationError> {
    task.validate()?;
    let mut stream = ConnectedGraphs {
        n: task.n,
        m: task.m,
        split: split_level(task.n),
        worker_index: task.worker_index,
        worker_count: task.worker_count,
        split_seen: 0,
        stack: Vec::new(),
        labeled: Vec::new().into_iter(),
    };
    if task.connected_only {
        stream.stack.push(Graph::empty(1)?);
    } else {
        let forms = labeled_classes(task.n, false, 1)?.remove(&task.m).unwrap_or_default();
        let mine: Vec<Graph> = forms
            .into_iter()
            .enumerate()
            .filter(|(i, _)| i % task.worker_count == task.worker_index)
            .map(|(_, f)| f.graph())
            .collect();
        stream.labeled = mine.into_iter();
    }
    Ok(stream)
}

/// Brute force: canonical forms of every labeled graph on `n` vertices, grouped
/// by size. Work is split across `workers` threads by edge-mask ranges.
pub fn labeled_classes(
    n: usize,
    connected_only: bool,
    workers: usize,
) -> Result<BTreeMap<usize, BTreeSet<CanonicalForm>>, EnumerationError> {
    if n == 0 || n > MAX_LABELED_ORDER {
        return Err(EnumerationError::OrderOutOfRange { n, max: MAX_LABELED_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let workers = workers.max(1) as u64;
    let chunk = total.div_ceil(workers);
    let scan = |lo: u64, hi: u64| -> BTreeMap<usize, BTreeSet<CanonicalForm>> {
        let mut out: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
        for mask in lo..hi {
            let mut adj = vec![0u64; n];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
            let g = Graph::from_adjacency(adj).expect("symmetric by construction");
            if connected_only && !g.is_connected() {
                continue;
            }
            out.entry(g.size()).or_default().insert(canonical_form(&g).expect("n <= 7"));
        }
        out
    };
    let parts: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (lo, hi) = (w * chunk, ((w + 1) * chunk).min(total));
                let scan = &scan;
                scope.spawn(move || scan(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    });
    let mut merged: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for part in parts {
        for (m, forms) in part {
            merged.entry(m).or_default().extend(forms);
        }
    }
    Ok(merged)
}

/// How a fold reports the graphs attaining the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduce {
    /// The maximum and the first maximizer in canonical-code order.
    Max,
    /// The maximum and every maximizer.
    ArgmaxSet,
}

/// Maximum of a measure over a class, with the graphs attaining it sorted by
/// canonical graph6 code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldResult<K> {
    pub value: K,
    pub witnesses: Vec<Graph>,
    pub class_size: u64,
}

struct Partial<K> {
    best: Option<(K, Vec<(String, Graph)>)>,
    seen: u64,
}

impl<K: Ord> Partial<K> {
    fn offer(&mut self, key: K, g: Graph, reduce: Reduce) {
        self.seen += 1;
        let code = crate::format::to_graph6(&g);
        match &mut self.best {
            Some((best, ws)) if key == *best => {
                ws.push((code, g));
                if reduce == Reduce::Max {
                    ws.sort_by(|a, b| a.0.cmp(&b.0));
                    ws.truncate(1);
                }
            }
            Some((best, _)) if key < *best => {}
            _ => self.best = Some((key, vec![(code, g)])),
        }
    }
}

/// Folds `measure` over the connected class `(n, m)` using `workers` disjoint
/// partitions run on their own threads. The result does not depend on `workers`.
pub fn class_fold<K, F>(
    n: usize,
    m: usize,
    workers: usize,
    measure: F,
    reduce: Reduce,
) -> Result<FoldResult<K>, EnumerationError>
where
    K: Ord + Send,
    F: Fn(&Graph) -> K + Sync,
{
    let workers = workers.max(1);
    let tasks: Vec<EnumerationTask> =
        (0..workers).map(|w| EnumerationTask::connected(n, m).with_partition(w, workers)).collect();
    for t in &tasks {
        t.validate()?;
    }
    let measure = &measure;
    let partials: Vec<Partial<K>> = std::thread::scope(|scope| {
        let handles: Vec<_> = tasks
            .into_iter()
            .map(|task| {
                scope.spawn(move || {
                    let mut p = Partial { best: None, seen: 0 };
                    for g in connected_graphs(task).expect("validated task") {
                        let key = measure(&g);
                        p.offer(key, g, reduce);
                    }
                    p
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("fold worker panicked")).collect()
    });
    let mut class_size = 0;
    let mut best: Option<(K, Vec<(String, Graph)>)> = None;
    for p in partials {
        class_size += p.seen;
        let Some((key, ws)) = p.best else { continue };
        match &mut best {
            Some((top, all)) if key == *top => all.extend(ws),
            Some((top, _)) if key < *top => {}
            _ => best = Some((key, ws)),
        }
    }
    let (value, mut ws) = best.ok_or(EnumerationError::EmptyClass { n, m })?;
    ws.sort_by(|a, b| a.0.cmp(&b.0));
    if reduce == Reduce::Max {
        ws.truncate(1);
    }
    Ok(FoldResult { value, witnesses: ws.into_iter().map(|(_, g)| g).collect(), class_size })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::k;

    fn forms(task: EnumerationTask) -> BTreeSet<CanonicalForm> {
        connected_graphs(task).unwrap().map(|g| canonical_form(&g).unwrap()).collect()
    }

    #[test]
    fn order_four_counts() {
        let counts: Vec<usize> =
            (3..=6).map(|m| connected_graphs(EnumerationTask::connected(4, m)).unwrap().count()).collect();
        assert_eq!(counts, vec![2, 2, 1, 1]);
    }

    #[test]
    fn emitted_graphs_are_canonical_and_connected() {
        for m in 5..=10 {
            for g in connected_graphs(EnumerationTask::connected(6, m)).unwrap() {
                assert!(g.is_connected());
                assert_eq!(g.size(), m);
                assert_eq!(canonical_form(&g).unwrap().graph(), g);
            }
        }
    }

    #[test]
    fn partitions_are_disjoint_and_cover() {
        let whole = forms(EnumerationTask::connected(7, 9));
        let mut union = BTreeSet::new();
        let mut total = 0;
        for w in 0..3 {
            let part = forms(EnumerationTask::connected(7, 9).with_partition(w, 3));
            total += part.len();
            union.extend(part);
        }
        assert_eq!(total, whole.len());
        assert_eq!(union, whole);
    }

    #[test]
    fn unconnected_mode_uses_labeled_classes() {
        let task = EnumerationTask { connected_only: false, ..EnumerationTask::connected(4, 2) };
        assert_eq!(connected_graphs(task).unwrap().count(), 2);
    }

    #[test]
    fn task_errors() {
        assert!(matches!(
            connected_graphs(EnumerationTask::connected(10, 9)),
            Err(EnumerationError::OrderOutOfRange { .. })
        ));
        assert!(matches!(connected_graphs(EnumerationTask::connected(5, 3)), Err(EnumerationError::Infeasible { .. })));
        assert!(matches!(
            connected_graphs(EnumerationTask::connected(5, 5).with_partition(2, 2)),
            Err(EnumerationError::InvalidPartition { .. })
        ));
    }

    #[test]
    fn folds() {
        let f = class_fold(7, 10, 1, |g| k(g, 3), Reduce::ArgmaxSet).unwrap();
        assert_eq!(f.value, 5);
        let f = class_fold(5, 10, 2, |g| k(g, 3), Reduce::Max).unwrap();
        assert_eq!((f.value, f.class_size), (10, 1));
        let f = class_fold(6, 5, 3, |g| k(g, 3), Reduce::ArgmaxSet).unwrap();
        assert_eq!((f.value, f.witnesses.len(), f.class_size), (0, 6, 6));
        let serial = class_fold(7, 12, 1, |g| k(g, 4), Reduce::ArgmaxSet).unwrap();
        let parallel = class_fold(7, 12, 4, |g| k(g, 4), Reduce::ArgmaxSet).unwrap();
        assert_eq!(serial, parallel);
    }
}
