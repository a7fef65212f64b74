//! Exact tools for the maximum number of `s`-cliques in connected graphs of
//! given order and size: decompositions and bounds, extremal constructions,
//! kernel peeling, spectral moments and S-order, isomorph-free enumeration,
//! and harnesses that check the closed forms against exhaustive search.

pub mod arith;
pub mod canon;
pub mod cliques;
pub mod enumerate;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod random;
pub mod spectral;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use cliques::{count_s_cliques, deletion_identity_check, CliqueCount};
pub use enumerate::{class_fold, connected_graphs, EnumerationTask, FoldResult, Reduce};
pub use extremal::{
    construct_b1, construct_b2, construct_bridge, construct_extremal_star, construct_krt, decompose_connected,
    decompose_erdos, erdos_bound, kernel, max_cliques_bound, ConnectedDecomposition, ErdosDecomposition,
};
pub use format::{from_graph6, to_graph6};
pub use graph::{Graph, GraphError, VertexSet};
pub use spectral::{s4_via_subgraphs, s_order_compare, spectral_moments, MomentVector, SOrder, SOrderResult};
pub use verify::{
    verify_extremal_kernels, verify_lemma_suite, verify_max_cliques, verify_s_order_last, GridConfig,
    LemmaSuiteConfig, VerificationReport,
};
