//! Weighted Brandes: single-source shortest paths with path counting, and
//! reverse-order dependency accumulation, for all pairs or a target set.

use std::collections::BinaryHeap;

use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::parallel::ordered_sum;
use crate::sssp::{same_length, Frontier, PredecessorLists};
use crate::Options;

/// Shortest-path state from one source.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceSolution {
    pub source: usize,
    /// `f64::INFINITY` for unreachable nodes.
    pub dist: Vec<f64>,
    /// Number of shortest paths; 0 for unreachable nodes.
    pub sigma: Vec<f64>,
    /// Reachable nodes by nondecreasing distance, ties by index.
    pub settle_order: Vec<usize>,
    pub preds: PredecessorLists<usize>,
}

/// Dijkstra from `source`, then shortest-path counts and predecessor sets.
///
/// Two lengths are equal when they differ by at most `options.epsilon`.
/// Predecessors and counts are derived from the final distances in settle
/// order, so they do not depend on heap tie-breaking.
pub fn dijkstra_sssp(graph: &Graph, source: usize, options: &Options) -> Result<SourceSolution> {
    let n = graph.node_count();
    if source >= n {
        return Err(Error::NodeOutOfRange { index: source, n });
    }
    let eps = options.epsilon;
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
        for (v, w) in graph.adjacent(u) {
            let nd = d + w;
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
        for (u, w) in graph.adjacent(v) {
            if rank[u] < rank[v] && same_length(dist[u] + w, dist[v], eps) {
                preds.push(v, u);
                count += sigma[u];
            }
        }
        sigma[v] = count;
    }

    Ok(SourceSolution { source, dist, sigma, settle_order: order, preds })
}

/// Dependencies `delta(s|v)` of every node on the solution's source,
/// counting only destinations in `targets`. The source's own entry is 0.
pub fn accumulate_dependencies(solution: &SourceSolution, targets: &NodeSet) -> Vec<f64> {
    let n = solution.dist.len();
    let mut delta = vec![0.0; n];
    for &w in solution.settle_order.iter().rev() {
        let indicator = if targets.contains(w) { 1.0 } else { 0.0 };
        let coeff = (indicator + delta[w]) / solution.sigma[w];
        for &u in solution.preds.get(w) {
            delta[u] += solution.sigma[u] * coeff;
        }
    }
    delta[solution.source] = 0.0;
    delta
}

/// Betweenness with respect to `targets`, summed over ordered target pairs
/// `(s, t)`, `s != t`, with endpoints excluded.
pub fn brandes(graph: &Graph, targets: &NodeSet, options: &Options) -> Result<CentralityVector> {
    if targets.len() < 2 {
        return Err(Error::TooFewTargets(targets.len()));
    }
    let n = graph.node_count();
    let scores = ordered_sum(targets.members(), n, |&s| {
        let sol = dijkstra_sssp(graph, s, options).expect("target index within graph");
        accumulate_dependencies(&sol, targets)
    });
    Ok(CentralityVector::ordered(scores))
}
