//! All-pairs betweenness over the skeleton.
//!
//! For every ordered pair of parts `(i, j)`, including `i == j`, the nodes
//! of `P_i` and `P_j` are extracted as singletons, a skeleton is formed for
//! that refinement, and the skeleton pass runs with sources `P_i` and
//! destinations `P_j`. Summing over all pairs covers every ordered node pair
//! exactly once.
//!
//! Extracting `P_i` and `P_j` leaves every other part and its frontier
//! unchanged (nodes adjacent to `P_i` were already frontiers), so the
//! searches of the other supernodes are computed once and shared.

use std::sync::Arc;
use std::time::Instant;

use crate::centrality::CentralityVector;
use crate::driver::{accumulate_sources, PhaseTimings, SkeletonRun};
use crate::error::Result;
use crate::graph::{Graph, NodeSet};
use crate::partition::Partition;
use crate::skeleton::{build_skeleton, compute_tables, Skeleton, SupernodeTables};
use crate::Options;

/// Sources `P_i`, destinations `P_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairTask {
    pub i: usize,
    pub j: usize,
    pub sources: NodeSet,
    pub dests: NodeSet,
}

impl PairTask {
    pub fn new(partition: &Partition, i: usize, j: usize) -> Self {
        let n = partition.node_count();
        let set = |p: usize| NodeSet::new(n, partition.part(p).iter().copied()).expect("part members < n");
        PairTask { i, j, sources: set(i), dests: set(j) }
    }

    /// Nodes that become singletons for this task.
    pub fn extracted(&self) -> NodeSet {
        let members = self.sources.members().iter().chain(self.dests.members()).copied();
        NodeSet::new(self.sources.universe(), members).expect("same universe")
    }
}

/// All `k^2` tasks in lexicographic `(i, j)` order.
pub fn pair_tasks(partition: &Partition) -> Vec<PairTask> {
    let k = partition.k();
    (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| PairTask::new(partition, i, j)).collect()
}

/// Builds the skeleton of a single task from scratch.
pub fn refine_pair_skeleton(
    graph: &Graph,
    partition: &Partition,
    task: &PairTask,
    options: &Options,
) -> Result<Skeleton> {
    let extracted = task.extracted();
    let refined = partition.refine_with_targets(&extracted);
    build_skeleton(graph, &refined, &extracted, options)
}

/// Builds per-task skeletons from the tables of the unrefined partition.
pub struct PairSkeletonBuilder<'a> {
    graph: &'a Graph,
    partition: &'a Partition,
    base: Vec<Arc<SupernodeTables>>,
}

impl<'a> PairSkeletonBuilder<'a> {
    pub fn new(graph: &'a Graph, partition: &'a Partition, options: &Options) -> Result<Self> {
        partition.validate(graph.node_count())?;
        let base = compute_tables(graph, partition, options);
        Ok(PairSkeletonBuilder { graph, partition, base })
    }

    pub fn base_tables(&self) -> &[Arc<SupernodeTables>] {
        &self.base
    }

    pub fn build(&self, task: &PairTask) -> Skeleton {
        let extracted = task.extracted();
        let refined = self.partition.refine_with_targets(&extracted);
        let tables = refined
            .parts()
            .iter()
            .map(|members| match members.as_slice() {
                [v] if extracted.contains(*v) => Arc::new(SupernodeTables::singleton(self.graph, *v)),
                _ => Arc::clone(&self.base[self.partition.part_of(members[0])]),
            })
            .collect();
        Skeleton::assemble(self.graph, refined, tables)
    }
}

pub fn brandes_pp_all(graph: &Graph, partition: &Partition, options: &Options) -> Result<CentralityVector> {
    brandes_pp_all_timed(graph, partition, options).map(|run| run.centrality)
}

/// Tasks run one after another (each parallel over its sources) and their
/// vectors are added in `(i, j)` order.
pub fn brandes_pp_all_timed(graph: &Graph, partition: &Partition, options: &Options) -> Result<SkeletonRun> {
    let wall = Instant::now();
    let start = Instant::now();
    let builder = PairSkeletonBuilder::new(graph, partition, options)?;
    let mut timings = PhaseTimings {
        build_sk_slowest_supernode: builder.base.iter().map(|t| t.elapsed).max().unwrap_or_default(),
        build_sk_total: start.elapsed(),
        ..Default::default()
    };

    let mut scores = vec![0.0; graph.node_count()];
    let mut skeleton_nodes = 0;
    let mut skeleton_edges = 0;
    for task in pair_tasks(partition) {
        let start = Instant::now();
        let skeleton = builder.build(&task);
        timings.build_sk_total += start.elapsed();
        skeleton_nodes = skeleton_nodes.max(skeleton.node_count());
        skeleton_edges = skeleton_edges.max(skeleton.edge_count());

        let (part, t) = accumulate_sources(&skeleton, task.sources.members(), &task.dests, options);
        timings.add(&t);
        for (c, d) in scores.iter_mut().zip(part) {
            *c += d;
        }
    }
    timings.wall = wall.elapsed();
    Ok(SkeletonRun { centrality: CentralityVector::ordered(scores), timings, skeleton_nodes, skeleton_edges })
}
