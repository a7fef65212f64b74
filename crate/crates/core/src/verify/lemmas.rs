//! Randomized and exhaustive checks of the supporting structural facts.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{millis, LemmaOutcome, VerificationReport, VerifyError, MAX_REPORTED_WITNESSES};
use crate::arith::{binomial, small_binomial};
use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::cliques::{deletion_identity_check, k};
use crate::enumerate::{connected_graphs, EnumerationTask, MAX_ENUMERATION_ORDER};
use crate::extremal::{
    construct_extremal_star, decompose_connected, kernel, kernel_vertices, max_cliques_bound, peel_in_order,
    ExtremalError,
};
use crate::format::to_graph6;
use crate::graph::{bit, members, Graph, VertexSet};
use crate::random::{random_connected_graph, random_permutation};
use crate::spectral::{d_transformation, s4_via_subgraphs, spectral_moments, transformation_ranks};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSuiteConfig {
    pub seed: u64,
    /// Random instances per randomized property.
    pub iterations: u64,
    /// Largest order for the exhaustive properties.
    pub exhaustive_n_max: usize,
    pub workers: usize,
}

impl Default for LemmaSuiteConfig {
    fn default() -> Self {
        LemmaSuiteConfig { seed: 0, iterations: 1000, exhaustive_n_max: 7, workers: 1 }
    }
}

struct Tally {
    outcome: LemmaOutcome,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally { outcome: LemmaOutcome { lemma: name.into(), checks: 0, violations: 0, counterexamples: Vec::new() } }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.outcome.checks += 1;
        if !ok {
            self.outcome.violations += 1;
            if self.outcome.counterexamples.len() < MAX_REPORTED_WITNESSES {
                self.outcome.counterexamples.push(witness());
            }
        }
    }
}

fn all_connected(n: usize, m: usize) -> impl Iterator<Item = Graph> {
    connected_graphs(EnumerationTask::connected(n, m)).expect("order within range")
}

fn every_connected(n_max: usize) -> impl Iterator<Item = Graph> {
    (1..=n_max).flat_map(|n| (n - 1..=small_binomial(n, 2) as usize).flat_map(move |m| all_connected(n, m)))
}

fn subset_cliques(g: &Graph, s: usize) -> u64 {
    let n = g.order();
    (0u64..1 << n)
        .filter(|mask| mask.count_ones() as usize == s)
        .filter(|&mask| members(mask).all(|v| g.neighbors(v) & mask == mask & !bit(v)))
        .count() as u64
}

/// A random connected induced subgraph of `g`, grown from a random vertex.
fn random_connected_subset(rng: &mut ChaCha8Rng, g: &Graph) -> VertexSet {
    let n = g.order();
    let target = rng.random_range(1..=n);
    let mut set = bit(rng.random_range(0..n));
    while (set.count_ones() as usize) < target {
        let reach = members(set).fold(0, |acc, v| acc | g.neighbors(v)) & !set;
        let frontier: Vec<usize> = members(reach).collect();
        set |= bit(frontier[rng.random_range(0..frontier.len())]);
    }
    set
}

/// Excess never grows when passing to a connected induced subgraph, and once
/// `p` exceeds the excess difference, peeling degrees `≤ p` from the subgraph
/// leaves the same vertices as peeling the whole graph.
fn kernel_stability(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("excess-monotone-kernel-stable");
    for _ in 0..cfg.iterations {
        let n = rng.random_range(2..=12);
        let density = rng.random_range(0.0..0.6);
        let g = random_connected_graph(rng, n, density);
        let set = random_connected_subset(rng, &g);
        let labels: Vec<usize> = members(set).collect();
        let h = g.induced_subgraph(set).expect("nonempty subset");
        let diff = g.excess() - h.excess();
        tally.check(diff >= 0, || format!("{} on {:#x}", to_graph6(&g), set));
        if diff < 0 {
            continue;
        }
        for p in diff as usize + 1..=diff as usize + 3 {
            let inner: VertexSet = members(kernel_vertices(&h, p)).map(|i| bit(labels[i])).fold(0, |a, b| a | b);
            tally.check(inner == kernel_vertices(&g, p), || format!("{} on {:#x}, p={p}", to_graph6(&g), set));
        }
    }
    tally.outcome
}

/// Every 2-core of a connected graph with `m ≥ n` is `K_{r+1}` or has a non-cut
/// vertex of degree at most `r − 1`. At `r = 2` (unicyclic graphs) a cycle
/// longer than 3 is a third possibility: it is 2-regular with no cut vertex.
fn low_degree_non_cut(cfg: &LemmaSuiteConfig) -> LemmaOutcome {
    let mut tally = Tally::new("low-degree-non-cut-vertex");
    for g in every_connected(cfg.exhaustive_n_max).filter(|g| g.size() >= g.order()) {
        let r = decompose_connected(g.size() as u64, g.order() as u64).expect("connected").r as usize;
        let h = kernel(&g, 1);
        let cut = h.articulation_points().expect("2-core of a connected graph is connected");
        let complete = h.order() == r + 1 && h.size() == small_binomial(r + 1, 2) as usize;
        let long_cycle = r == 2 && h.order() > 3 && (0..h.order()).all(|u| h.degree(u) == 2);
        let ok = complete || long_cycle || (0..h.order()).any(|u| cut & bit(u) == 0 && h.degree(u) < r);
        tally.check(ok, || to_graph6(&g));
    }
    tally.outcome
}

/// `C(a,s) + C(b,s) ≤ C(c,s) + C(a+b−c,s)` for `b ≤ a ≤ c ≤ a + b`, with
/// equality exactly when `c ≤ s − 1` or `c = a`.
fn binomial_rebalancing() -> LemmaOutcome {
    let mut tally = Tally::new("binomial-rebalancing");
    for s in 2u64..=8 {
        for a in 1u64..=14 {
            for b in 1..=a {
                for c in a..=a + b {
                    let lhs = binomial(a, s).unwrap() + binomial(b, s).unwrap();
                    let rhs = binomial(c, s).unwrap() + binomial(a + b - c, s).unwrap();
                    let equal_expected = c < s || c == a;
                    tally.check(lhs <= rhs && (lhs == rhs) == equal_expected, || format!("a={a} b={b} c={c} s={s}"));
                }
            }
        }
    }
    tally.outcome
}

/// Connected graphs with `m − n ≤ C(s,2) − s − 1` contain no `s`-clique.
fn clique_free_band(cfg: &LemmaSuiteConfig) -> LemmaOutcome {
    let mut tally = Tally::new("clique-free-band");
    for g in every_connected(cfg.exhaustive_n_max) {
        for s in 3..=6 {
            if g.excess() < small_binomial(s, 2) as i64 - s as i64 {
                tally.check(k(&g, s) == 0, || format!("{} s={s}", to_graph6(&g)));
            }
        }
    }
    tally.outcome
}

/// `k_s(G) = k_s(G − v) + k_{s−1}(G[N(v)])`, with both sides also matched
/// against subset enumeration.
fn deletion_identity(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("deletion-identity");
    for _ in 0..cfg.iterations {
        let n = rng.random_range(1..=10);
        let density = rng.random_range(0.0..1.0);
        let g = random_connected_graph(rng, n, density);
        let v = rng.random_range(0..n);
        let s = rng.random_range(2..=6);
        let (lhs, rhs) = deletion_identity_check(&g, v, s).expect("vertex in range");
        tally.check(lhs == rhs && lhs == subset_cliques(&g, s), || format!("{} v={v} s={s}", to_graph6(&g)));
    }
    tally.outcome
}

/// The fourth spectral moment equals `2m + 4 Σ C(d,2) + 8 c₄`.
fn s4_formula(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("s4-subgraph-formula");
    for _ in 0..cfg.iterations {
        let n = rng.random_range(1..=14);
        let density = rng.random_range(0.0..1.0);
        let g = random_connected_graph(rng, n, density);
        let walks = spectral_moments(&g, 4).expect("small order").as_slice()[4];
        tally.check(walks == s4_via_subgraphs(&g), || to_graph6(&g));
    }
    tally.outcome
}

/// Sorting a sequence that dominates a nonincreasing prefix keeps the domination.
fn dominance_after_reorder(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("dominance-after-reorder");
    for _ in 0..cfg.iterations {
        let k = rng.random_range(1..=8);
        let n = rng.random_range(k..=k + 8);
        let mut dbar: Vec<usize> = (0..k).map(|_| rng.random_range(2..=10)).collect();
        dbar.sort_unstable_by(|a, b| b.cmp(a));
        let mut pi: Vec<usize> = dbar.iter().map(|&d| d + rng.random_range(0..=3)).collect();
        pi.extend((k..n).map(|_| rng.random_range(1..=12)));
        let mut sorted = pi.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        tally.check((0..k).all(|i| sorted[i] >= dbar[i]), || format!("dbar={dbar:?} pi={pi:?}"));
    }
    tally.outcome
}

/// Each admissible transformation keeps order, size and 2-core, yields the
/// moved degree sequence, and strictly increases `S_4`.
fn transformation_raises_s4(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("transformation-raises-s4");
    let mut done = 0;
    let mut attempts = 0;
    while done < cfg.iterations && attempts < cfg.iterations * 50 {
        attempts += 1;
        let n = rng.random_range(4..=12);
        let density = rng.random_range(0.05..0.35);
        let g = random_connected_graph(rng, n, density);
        let ranks = transformation_ranks(&g);
        let Some(&rank) = ranks.get(rng.random_range(0..ranks.len().max(1))) else { continue };
        done += 1;
        let ok = match d_transformation(&g, rank) {
            Ok(h) => {
                let mut d = g.degree_sequence();
                d[0] += 1;
                d[rank] -= 1;
                d.sort_unstable_by(|a, b| b.cmp(a));
                h.is_connected()
                    && h.order() == g.order()
                    && h.size() == g.size()
                    && h.degree_sequence() == d
                    && is_isomorphic(&kernel(&h, 1), &kernel(&g, 1)).unwrap_or(false)
                    && s4_via_subgraphs(&h) > s4_via_subgraphs(&g)
            }
            Err(_) => false,
        };
        tally.check(ok, || format!("{} rank={rank}", to_graph6(&g)));
    }
    tally.outcome
}

/// Within each class of connected graphs sharing a 2-core `H` and order `n`,
/// the `S_4` maximizers are exactly the graphs with degree sequence
/// `(d̄₁ + n − k, d̄₂, …, d̄_k, 1, …, 1)`.
fn pendant_star_maximizes_s4(cfg: &LemmaSuiteConfig) -> LemmaOutcome {
    let mut tally = Tally::new("pendant-star-maximizes-s4");
    for n in 4..=cfg.exhaustive_n_max {
        for m in n..=small_binomial(n, 2) as usize {
            let mut classes: BTreeMap<CanonicalForm, Vec<(Graph, u128)>> = BTreeMap::new();
            for g in all_connected(n, m) {
                let core = kernel(&g, 1);
                if core.order() < n {
                    let s4 = s4_via_subgraphs(&g);
                    classes.entry(canonical_form(&core).expect("small core")).or_default().push((g, s4));
                }
            }
            for (core, class) in classes {
                let h = core.graph();
                let mut target = h.degree_sequence();
                target[0] += n - h.order();
                target.resize(n, 1);
                let best = class.iter().map(|(_, s4)| *s4).max().expect("nonempty class");
                for (g, s4) in &class {
                    let ok = (*s4 == best) == (g.degree_sequence() == target);
                    tally.check(ok, || format!("{} core={}", to_graph6(g), core));
                }
            }
        }
    }
    tally.outcome
}

/// Every removal order reaches the same `s`-kernel as the bucket-queue peel.
fn kernel_order_independence(cfg: &LemmaSuiteConfig, rng: &mut ChaCha8Rng) -> LemmaOutcome {
    let mut tally = Tally::new("kernel-order-independence");
    let graphs = cfg.iterations.div_ceil(100);
    for _ in 0..graphs {
        let n = rng.random_range(1..=16);
        let density = rng.random_range(0.0..0.7);
        let g = random_connected_graph(rng, n, density);
        let s = rng.random_range(1..=5);
        let expected = kernel_vertices(&g, s);
        for _ in 0..100 {
            let order = random_permutation(rng, n);
            tally.check(peel_in_order(&g, s, &order) == expected, || format!("{} s={s} order={order:?}", to_graph6(&g)));
        }
    }
    tally.outcome
}

/// The pendant-star construction attains the clique bound at every feasible
/// `(m, n)` with `n ≤ 14`.
fn bound_attainment() -> Result<LemmaOutcome, ExtremalError> {
    let mut tally = Tally::new("bound-attainment");
    for n in 1..=14u64 {
        for m in n - 1..=binomial(n, 2).unwrap() {
            let g = construct_extremal_star(m, n)?;
            for s in 3..=6u64 {
                let bound = max_cliques_bound(m, n, s)?;
                tally.check(k(&g, s as usize) == bound, || format!("{} m={m} n={n} s={s}", to_graph6(&g)));
            }
        }
    }
    Ok(tally.outcome)
}

/// Runs every supporting property under one seed. Randomized properties draw
/// from a ChaCha stream, so a seed fixes the whole report apart from timing.
pub fn verify_lemma_suite(cfg: &LemmaSuiteConfig) -> Result<VerificationReport, VerifyError> {
    if cfg.exhaustive_n_max > MAX_ENUMERATION_ORDER {
        return Err(VerifyError::Config(format!(
            "exhaustive order {} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}",
            cfg.exhaustive_n_max
        )));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let lemmas = vec![
        kernel_stability(cfg, &mut rng),
        low_degree_non_cut(cfg),
        binomial_rebalancing(),
        clique_free_band(cfg),
        deletion_identity(cfg, &mut rng),
        s4_formula(cfg, &mut rng),
        dominance_after_reorder(cfg, &mut rng),
        transformation_raises_s4(cfg, &mut rng),
        pendant_star_maximizes_s4(cfg),
        kernel_order_independence(cfg, &mut rng),
        bound_attainment()?,
    ];
    Ok(VerificationReport {
        theorem_id: "lemma-suite".into(),
        grid: Vec::new(),
        lemmas,
        seed: Some(cfg.seed),
        workers: cfg.workers,
        elapsed_ms: millis(start),
    })
}
