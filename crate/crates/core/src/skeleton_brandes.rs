//! Brandes on the skeleton: edge lengths and multiplicities come from the
//! characteristic tuples, so a path's count is the product of the
//! multiplicities along it.

use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::NodeSet;
use crate::skeleton::Skeleton;
use crate::sssp::{same_length, Frontier, PredecessorLists};
use crate::Options;

/// Per-source state over skeleton node indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonSolution {
    /// Source as an original node index.
    pub source: usize,
    pub source_sk: usize,
    pub dist: Vec<f64>,
    pub sigma: Vec<f64>,
    pub settle_order: Vec<usize>,
    /// Predecessor and the multiplicity of the connecting edge.
    pub preds: PredecessorLists<(usize, f64)>,
    /// `delta(s|x)`; 0 at the source.
    pub delta: Vec<f64>,
}

/// Runs the multiplicity-weighted Brandes pass from every source.
///
/// `sources` and `dests` are sets of original node indices. Every source
/// must be a skeleton node. Destinations outside the skeleton are ignored;
/// under the singleton-target contract those are isolated nodes.
pub fn brandes_sk(
    skeleton: &Skeleton,
    sources: &NodeSet,
    dests: &NodeSet,
    options: &Options,
) -> Result<Vec<SkeletonSolution>> {
    let source_sk = sources
        .members()
        .iter()
        .map(|&s| skeleton.skeleton_node(s).ok_or(Error::NotInSkeleton(s)))
        .collect::<Result<Vec<_>>>()?;
    let dest_mask = skeleton_mask(skeleton, dests);
    Ok(source_sk.par_iter().map(|&x| solve_source(skeleton, x, &dest_mask, options)).collect())
}

/// `dests` projected onto skeleton indices.
pub fn skeleton_mask(skeleton: &Skeleton, dests: &NodeSet) -> Vec<bool> {
    skeleton.graph_nodes().iter().map(|&v| dests.contains(v)).collect()
}

/// Single-source pass from skeleton node `source`.
pub fn solve_source(skeleton: &Skeleton, source: usize, dests: &[bool], options: &Options) -> SkeletonSolution {
    let eps = options.epsilon;
    let n = skeleton.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut rank = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Frontier { dist: 0.0, node: source });
    while let Some(Frontier { dist: d, node: u }) = heap.pop() {
        if rank[u] != usize::MAX || d > dist[u] {
            continue;
        }
        rank[u] = order.len();
        order.push(u);
        for (v, t) in skeleton.adjacent(u) {
            let nd = d + t.dist;
            if rank[v] == usize::MAX && nd < dist[v] {
                dist[v] = nd;
                heap.push(Frontier { dist: nd, node: v });
            }
        }
    }

    let mut sigma = vec![0.0; n];
    let mut preds = PredecessorLists::new(n);
    sigma[source] = 1.0;
    for &v in &order[1..] {
        preds.begin(v);
        let mut count = 0.0;
        for (u, t) in skeleton.adjacent(v) {
            if rank[u] < rank[v] && same_length(dist[u] + t.dist, dist[v], eps) {
                preds.push(v, (u, t.mult));
                count += sigma[u] * t.mult;
            }
        }
        sigma[v] = count;
    }

    let mut delta = vec![0.0; n];
    for &w in order.iter().rev() {
        let indicator = if dests[w] { 1.0 } else { 0.0 };
        let coeff = (indicator + delta[w]) / sigma[w];
        for &(u, mult) in preds.get(w) {
            delta[u] += mult * sigma[u] * coeff;
        }
    }
    delta[source] = 0.0;

    SkeletonSolution {
        source: skeleton.graph_node(source),
        source_sk: source,
        dist,
        sigma,
        settle_order: order,
        preds,
        delta,
    }
}
