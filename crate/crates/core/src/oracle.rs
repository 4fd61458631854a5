//! Brute-force references for small graphs.
//!
//! These share no code with the Dijkstra-based routines: distances come
//! from Floyd-Warshall, path counts from a distance-ordered recurrence, and
//! pair dependencies from the defining product formula.

use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::skeleton::Skeleton;
use crate::Options;

pub const ORACLE_MAX_NODES: usize = 200;
pub const ENUMERATION_MAX_NODES: usize = 12;

/// All-pairs distances and shortest-path counts.
#[derive(Debug, Clone)]
pub struct AllPairs {
    n: usize,
    dist: Vec<f64>,
    sigma: Vec<f64>,
}

impl AllPairs {
    pub fn compute(graph: &Graph, options: &Options) -> Result<Self> {
        let n = graph.node_count();
        if n > ORACLE_MAX_NODES {
            return Err(Error::GraphTooLarge { n, limit: ORACLE_MAX_NODES });
        }
        let dist = floyd_warshall(graph);
        let mut sigma = vec![0.0; n * n];
        for s in 0..n {
            let mut by_dist: Vec<usize> = (0..n).filter(|&v| dist[s * n + v].is_finite()).collect();
            by_dist.sort_by(|&a, &b| dist[s * n + a].total_cmp(&dist[s * n + b]).then(a.cmp(&b)));
            sigma[s * n + s] = 1.0;
            for &v in by_dist.iter().skip(1) {
                let mut count = 0.0;
                for (u, w) in graph.adjacent(v) {
                    let du = dist[s * n + u];
                    if du < dist[s * n + v] && (du + w - dist[s * n + v]).abs() <= options.epsilon {
                        count += sigma[s * n + u];
                    }
                }
                sigma[s * n + v] = count;
            }
        }
        Ok(AllPairs { n, dist, sigma })
    }

    /// Distances and path counts between skeleton nodes, where a path's
    /// length sums tuple distances and its count is the product of tuple
    /// multiplicities. Indices are skeleton node indices.
    pub fn for_skeleton(skeleton: &Skeleton, options: &Options) -> Result<Self> {
        let n = skeleton.node_count();
        if n > ORACLE_MAX_NODES {
            return Err(Error::GraphTooLarge { n, limit: ORACLE_MAX_NODES });
        }
        let mut dist = vec![f64::INFINITY; n * n];
        for x in 0..n {
            dist[x * n + x] = 0.0;
        }
        for (x, y, t) in skeleton.edges() {
            dist[x * n + y] = dist[x * n + y].min(t.dist);
            dist[y * n + x] = dist[y * n + x].min(t.dist);
        }
        relax_all(&mut dist, n);
        let mut sigma = vec![0.0; n * n];
        for s in 0..n {
            let mut by_dist: Vec<usize> = (0..n).filter(|&v| dist[s * n + v].is_finite()).collect();
            by_dist.sort_by(|&a, &b| dist[s * n + a].total_cmp(&dist[s * n + b]).then(a.cmp(&b)));
            sigma[s * n + s] = 1.0;
            for &v in by_dist.iter().skip(1) {
                let mut count = 0.0;
                for (u, t) in skeleton.adjacent(v) {
                    let du = dist[s * n + u];
                    if du < dist[s * n + v] && (du + t.dist - dist[s * n + v]).abs() <= options.epsilon {
                        count += sigma[s * n + u] * t.mult;
                    }
                }
                sigma[s * n + v] = count;
            }
        }
        Ok(AllPairs { n, dist, sigma })
    }

    pub fn dist(&self, s: usize, t: usize) -> f64 {
        self.dist[s * self.n + t]
    }

    pub fn sigma(&self, s: usize, t: usize) -> f64 {
        self.sigma[s * self.n + t]
    }
}

fn floyd_warshall(graph: &Graph) -> Vec<f64> {
    let n = graph.node_count();
    let mut d = vec![f64::INFINITY; n * n];
    for v in 0..n {
        d[v * n + v] = 0.0;
    }
    for (u, v, w) in graph.edges() {
        d[u * n + v] = w;
        d[v * n + u] = w;
    }
    relax_all(&mut d, n);
    d
}

fn relax_all(d: &mut [f64], n: usize) {
    for m in 0..n {
        for i in 0..n {
            let dim = d[i * n + m];
            if !dim.is_finite() {
                continue;
            }
            for j in 0..n {
                let via = dim + d[m * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
}

/// `C(v) = sum over ordered target pairs (s, t), s != t, v not in {s, t}`
/// of `sigma(s, v) sigma(v, t) / sigma(s, t)` whenever
/// `d(s, v) + d(v, t) = d(s, t)`.
pub fn oracle_betweenness(graph: &Graph, targets: &NodeSet, options: &Options) -> Result<CentralityVector> {
    let ap = AllPairs::compute(graph, options)?;
    let n = graph.node_count();
    let mut scores = vec![0.0; n];
    for &s in targets.members() {
        for &t in targets.members() {
            if s == t || !ap.dist(s, t).is_finite() {
                continue;
            }
            for (v, score) in scores.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let through = ap.dist(s, v) + ap.dist(v, t);
                if (through - ap.dist(s, t)).abs() <= options.epsilon {
                    *score += ap.sigma(s, v) * ap.sigma(v, t) / ap.sigma(s, t);
                }
            }
        }
    }
    Ok(CentralityVector::ordered(scores))
}

/// Every shortest `s`-`t` path as a node sequence, by depth-first search
/// over simple paths pruned at `d(s, t)`. Paths come out in lexicographic
/// order of their node indices.
pub fn enumerate_paths(graph: &Graph, s: usize, t: usize, options: &Options) -> Result<Vec<Vec<usize>>> {
    let n = graph.node_count();
    if n > ENUMERATION_MAX_NODES {
        return Err(Error::GraphTooLarge { n, limit: ENUMERATION_MAX_NODES });
    }
    for x in [s, t] {
        if x >= n {
            return Err(Error::NodeOutOfRange { index: x, n });
        }
    }
    let target_len = floyd_warshall(graph)[s * n + t];
    let mut found = Vec::new();
    if !target_len.is_finite() {
        return Ok(found);
    }
    let mut on_path = vec![false; n];
    let mut path = vec![s];
    on_path[s] = true;
    extend(graph, t, target_len, 0.0, options.epsilon, &mut path, &mut on_path, &mut found);
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    graph: &Graph,
    t: usize,
    limit: f64,
    len: f64,
    eps: f64,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let u = *path.last().unwrap();
    if u == t {
        if (len - limit).abs() <= eps {
            found.push(path.clone());
        }
        return;
    }
    for (v, w) in graph.adjacent(u) {
        if on_path[v] || len + w > limit + eps {
            continue;
        }
        on_path[v] = true;
        path.push(v);
        extend(graph, t, limit, len + w, eps, path, on_path, found);
        path.pop();
        on_path[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn g(text: &str) -> Graph {
        load_edge_list(text.as_bytes()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let o = Options::default();
        let p3 = g("a b\nb c");
        let ac = NodeSet::new(3, [0, 2]).unwrap();
        assert_eq!(oracle_betweenness(&p3, &ac, &o).unwrap().scores, [0.0, 2.0, 0.0]);

        let k4 = g("a b\na c\na d\nb c\nb d\nc d");
        assert_eq!(oracle_betweenness(&k4, &NodeSet::all(4), &o).unwrap().scores, [0.0; 4]);

        let c4 = g("a b\nb c\nc d\nd a");
        assert_eq!(oracle_betweenness(&c4, &NodeSet::all(4), &o).unwrap().scores, [1.0; 4]);
    }

    #[test]
    fn enumeration_examples() {
        let o = Options::default();
        let c4 = g("a b\nb c\nc d\nd a");
        assert_eq!(enumerate_paths(&c4, 0, 2, &o).unwrap(), [vec![0, 1, 2], vec![0, 3, 2]]);
        let p3 = g("a b\nb c");
        assert_eq!(enumerate_paths(&p3, 0, 2, &o).unwrap(), [vec![0, 1, 2]]);
        let split = g("a b\nc d");
        assert!(enumerate_paths(&split, 0, 3, &o).unwrap().is_empty());
    }

    #[test]
    fn size_guards() {
        let o = Options::default();
        let big = Graph::from_edges(201, [(0, 1, 1.0)]).unwrap();
        assert!(matches!(oracle_betweenness(&big, &NodeSet::all(201), &o), Err(Error::GraphTooLarge { .. })));
        let medium = Graph::from_edges(13, [(0, 1, 1.0)]).unwrap();
        assert!(matches!(enumerate_paths(&medium, 0, 1, &o), Err(Error::GraphTooLarge { .. })));
    }
}
