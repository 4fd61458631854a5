//! Exact betweenness centrality by partition skeletons.
//!
//! Given a partition of a weighted undirected graph, each part is reduced to
//! its frontier (members with an outside neighbor). Frontiers are joined by
//! the original cross-part edges and by per-part cliques whose edges carry
//! the length and number of shortest paths through the part's interior. A
//! multiplicity-aware Brandes pass over this skeleton yields exact
//! dependencies for frontier nodes, and per-part distance tables recover the
//! interior nodes.
//!
//! The classic weighted Brandes algorithm ([`brandes::brandes`]) and two
//! brute-force references ([`oracle`]) are included for comparison.
//!
//! Scores use the ordered-pair convention: every ordered pair `(s, t)` with
//! `s != t` contributes, and endpoints are excluded. Path counts are `f64`
//! and exact while below 2^53.

pub mod all_pairs;
pub mod brandes;
pub mod centrality;
pub mod driver;
pub mod error;
pub mod finish;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod parallel;
pub mod partition;
pub mod skeleton;
pub mod skeleton_brandes;
mod sssp;

pub use all_pairs::{brandes_pp_all, brandes_pp_all_timed, pair_tasks, PairTask};
pub use brandes::{accumulate_dependencies, brandes, dijkstra_sssp, SourceSolution};
pub use centrality::{CentralityVector, PairConvention};
pub use driver::{brandes_pp, brandes_pp_timed, PhaseTimings, SkeletonRun};
pub use error::{Error, Result};
pub use graph::{load_edge_list, load_node_set, Graph, NodeSet};
pub use oracle::{enumerate_paths, oracle_betweenness};
pub use partition::{bfs_balanced_partition, load_partition, Partition};
pub use skeleton::{build_skeleton, CharTuple, Skeleton};
pub use sssp::PredecessorLists;

pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Numerical settings shared by every algorithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    /// Two path lengths are equal when they differ by at most this much.
    /// Integer weights keep every comparison exact.
    pub epsilon: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { epsilon: DEFAULT_EPSILON }
    }
}
