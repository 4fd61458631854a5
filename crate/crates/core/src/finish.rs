//! Recovers dependencies of interior (non-frontier) nodes from the skeleton
//! solutions and the per-supernode frontier tables.
//!
//! For a source `s` and an interior node `v` of supernode `i`:
//!
//! * `d(s, v)` is the minimum over frontiers `f` of `d(s, f) + d_i(f, v)`,
//!   and `sigma(s, v)` sums `sigma(s, f) * sigma_i(f, v)` over the
//!   minimizing frontiers (the last frontier before `v`);
//! * every shortest path through `v` leaves the supernode at a first
//!   frontier `f` with `d(s, v) + d_i(v, f) = d(s, f)`, so
//!   `delta(s|v) = sum_f sigma(s, v) * sigma_i(v, f) / sigma(s, f) * (1[f is a destination] + delta(s|f))`.

use crate::centrality::CentralityVector;
use crate::graph::NodeSet;
use crate::skeleton::Skeleton;
use crate::skeleton_brandes::SkeletonSolution;
use crate::sssp::same_length;
use crate::Options;

/// `(d(s, v), sigma(s, v))` for the `r`-th interior node of supernode
/// `part`; `(inf, 0)` when no frontier reaches it.
pub fn interior_source_values(
    solution: &SkeletonSolution,
    skeleton: &Skeleton,
    part: usize,
    r: usize,
    options: &Options,
) -> (f64, f64) {
    let (d_f, s_f) = skeleton.supernodes()[part].interior_row(r);
    let fs = skeleton.frontier_skeleton_nodes(part);
    source_values(solution, fs, d_f, s_f, options.epsilon)
}

#[inline]
fn source_values(sol: &SkeletonSolution, fs: &[usize], d_f: &[f64], s_f: &[f64], eps: f64) -> (f64, f64) {
    let best = fs.iter().zip(d_f).map(|(&x, &d)| sol.dist[x] + d).fold(f64::INFINITY, f64::min);
    if !best.is_finite() {
        return (f64::INFINITY, 0.0);
    }
    let sigma = fs
        .iter()
        .zip(d_f.iter().zip(s_f))
        .filter(|&(&x, (&d, _))| same_length(sol.dist[x] + d, best, eps))
        .map(|(&x, (_, &s))| sol.sigma[x] * s)
        .sum();
    (best, sigma)
}

/// `delta(s|v)` for every original node, from one skeleton solution.
/// Frontier values pass through; the source gets 0.
pub fn finish_source(solution: &SkeletonSolution, skeleton: &Skeleton, dests: &NodeSet, options: &Options) -> Vec<f64> {
    let eps = options.epsilon;
    let mut out = vec![0.0; skeleton.graph_node_count()];
    for (x, &v) in skeleton.graph_nodes().iter().enumerate() {
        out[v] = solution.delta[x];
    }
    out[solution.source] = 0.0;

    let mut dist_f = Vec::new();
    let mut sigma_f = Vec::new();
    let mut weight = Vec::new();
    for (part, tables) in skeleton.supernodes().iter().enumerate() {
        let fs = skeleton.frontier_skeleton_nodes(part);
        if fs.is_empty() || tables.interior.is_empty() {
            continue;
        }
        dist_f.clear();
        sigma_f.clear();
        weight.clear();
        for (&x, &f) in fs.iter().zip(&tables.frontier) {
            dist_f.push(solution.dist[x]);
            sigma_f.push(solution.sigma[x]);
            // (1[f in dests] + delta(s|f)) / sigma(s, f)
            let ind = if dests.contains(f) { 1.0 } else { 0.0 };
            weight.push((ind + solution.delta[x]) / solution.sigma[x]);
        }
        if dist_f.iter().all(|d| !d.is_finite()) {
            continue;
        }
        for (r, &v) in tables.interior.iter().enumerate() {
            let (d_fv, s_fv) = tables.interior_row(r);
            let best = dist_f.iter().zip(d_fv).map(|(a, b)| a + b).fold(f64::INFINITY, f64::min);
            if !best.is_finite() {
                continue;
            }
            let mut sigma_sv = 0.0;
            let mut acc = 0.0;
            for j in 0..dist_f.len() {
                let d = d_fv[j];
                if same_length(dist_f[j] + d, best, eps) {
                    sigma_sv += sigma_f[j] * s_fv[j];
                }
                if same_length(best + d, dist_f[j], eps) {
                    acc += s_fv[j] * weight[j];
                }
            }
            out[v] = sigma_sv * acc;
        }
    }
    out
}

/// Sums `delta(s|.)` over the given solutions in order.
pub fn finish_centrality(
    solutions: &[SkeletonSolution],
    skeleton: &Skeleton,
    targets: &NodeSet,
    options: &Options,
) -> CentralityVector {
    let mut scores = vec![0.0; skeleton.graph_node_count()];
    for sol in solutions {
        for (c, d) in scores.iter_mut().zip(finish_source(sol, skeleton, targets, options)) {
            *c += d;
        }
    }
    CentralityVector::ordered(scores)
}
