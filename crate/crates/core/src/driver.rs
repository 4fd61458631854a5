//! End-to-end skeleton betweenness for a target set: refine the partition
//! so targets are singletons, build the skeleton, run the skeleton Brandes
//! pass from every target, and recover interior dependencies.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::finish::finish_source;
use crate::graph::{Graph, NodeSet};
use crate::partition::Partition;
use crate::skeleton::{build_skeleton, Skeleton};
use crate::skeleton_brandes::{skeleton_mask, solve_source};
use crate::Options;

/// Wall-clock breakdown of one skeleton run.
///
/// The reported total adds the slowest supernode build (supernodes are
/// independent and can be built in parallel), the skeleton Brandes pass and
/// the finishing step.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimings {
    pub build_sk_slowest_supernode: Duration,
    pub build_sk_total: Duration,
    pub brandes_sk: Duration,
    pub finish: Duration,
    pub wall: Duration,
}

impl PhaseTimings {
    pub fn reported_total(&self) -> Duration {
        self.build_sk_slowest_supernode + self.brandes_sk + self.finish
    }

    pub(crate) fn add(&mut self, other: &PhaseTimings) {
        self.build_sk_slowest_supernode += other.build_sk_slowest_supernode;
        self.build_sk_total += other.build_sk_total;
        self.brandes_sk += other.brandes_sk;
        self.finish += other.finish;
        self.wall += other.wall;
    }
}

#[derive(Debug, Clone)]
pub struct SkeletonRun {
    pub centrality: CentralityVector,
    pub timings: PhaseTimings,
    pub skeleton_nodes: usize,
    pub skeleton_edges: usize,
}

pub fn brandes_pp(
    graph: &Graph,
    partition: &Partition,
    targets: &NodeSet,
    options: &Options,
) -> Result<CentralityVector> {
    brandes_pp_timed(graph, partition, targets, options).map(|run| run.centrality)
}

pub fn brandes_pp_timed(
    graph: &Graph,
    partition: &Partition,
    targets: &NodeSet,
    options: &Options,
) -> Result<SkeletonRun> {
    let wall = Instant::now();
    if targets.len() < 2 {
        return Err(Error::TooFewTargets(targets.len()));
    }
    partition.validate(graph.node_count())?;
    let refined = partition.refine_with_targets(targets);

    let start = Instant::now();
    let skeleton = build_skeleton(graph, &refined, targets, options)?;
    let mut timings = PhaseTimings {
        build_sk_slowest_supernode: skeleton.slowest_supernode_time(),
        build_sk_total: start.elapsed(),
        ..Default::default()
    };

    let (scores, t) = accumulate_sources(&skeleton, targets.members(), targets, options);
    timings.brandes_sk = t.brandes_sk;
    timings.finish = t.finish;
    timings.wall = wall.elapsed();
    Ok(SkeletonRun {
        centrality: CentralityVector::ordered(scores),
        timings,
        skeleton_nodes: skeleton.node_count(),
        skeleton_edges: skeleton.edge_count(),
    })
}

const BLOCK: usize = 32;

/// Sum of `delta(s|.)` over `sources` (original indices) with destinations
/// `dests`. Sources outside the skeleton are isolated and contribute
/// nothing. Sources run in parallel blocks; per-source vectors are added in
/// source order so the result does not depend on the worker count.
pub(crate) fn accumulate_sources(
    skeleton: &Skeleton,
    sources: &[usize],
    dests: &NodeSet,
    options: &Options,
) -> (Vec<f64>, PhaseTimings) {
    let mask = skeleton_mask(skeleton, dests);
    let sk_sources: Vec<usize> = sources.iter().filter_map(|&s| skeleton.skeleton_node(s)).collect();
    let mut scores = vec![0.0; skeleton.graph_node_count()];
    let mut timings = PhaseTimings::default();
    for block in sk_sources.chunks(BLOCK) {
        let start = Instant::now();
        let solutions: Vec<_> = block.par_iter().map(|&x| solve_source(skeleton, x, &mask, options)).collect();
        timings.brandes_sk += start.elapsed();

        let start = Instant::now();
        let parts: Vec<Vec<f64>> =
            solutions.par_iter().map(|sol| finish_source(sol, skeleton, dests, options)).collect();
        for part in parts {
            for (c, d) in scores.iter_mut().zip(part) {
                *c += d;
            }
        }
        timings.finish += start.elapsed();
    }
    (scores, timings)
}
