//! Node partitions: loading, validation, target-singleton refinement and a
//! simple region-growing partitioner.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};

/// Assignment of every node to exactly one of `k` non-empty parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from arbitrary part ids. Ids are compacted to
    /// `0..k` preserving their relative order.
    pub fn from_assignment(ids: &[usize]) -> Self {
        let mut distinct: Vec<usize> = ids.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let remap: HashMap<usize, usize> = distinct.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let part_of: Vec<usize> = ids.iter().map(|id| remap[id]).collect();
        let mut parts = vec![Vec::new(); distinct.len()];
        for (v, &p) in part_of.iter().enumerate() {
            parts[p].push(v);
        }
        Partition { part_of, parts }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_assignment(&vec![0; n])
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_assignment(&(0..n).collect::<Vec<_>>())
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn node_count(&self) -> usize {
        self.part_of.len()
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    /// Members of part `i`, ascending.
    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn is_singleton(&self, v: usize) -> bool {
        self.parts[self.part_of[v]].len() == 1
    }

    /// Checks coverage of `0..n`, disjointness and that no part is empty.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPartition(m));
        if self.part_of.len() != n {
            return bad(format!("covers {} nodes, graph has {n}", self.part_of.len()));
        }
        let mut seen = vec![false; n];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return bad(format!("part {i} is empty"));
            }
            for &v in part {
                if v >= n || seen[v] || self.part_of[v] != i {
                    return bad(format!("node {v} is misassigned"));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return bad(format!("node {v} is unassigned"));
        }
        Ok(())
    }

    /// Moves every node of `extract` into its own singleton part. Remaining
    /// nodes keep their grouping; parts left empty are dropped.
    pub fn refine_with_targets(&self, extract: &NodeSet) -> Partition {
        let k = self.k();
        let ids: Vec<usize> =
            (0..self.node_count()).map(|v| if extract.contains(v) { k + v } else { self.part_of[v] }).collect();
        Partition::from_assignment(&ids)
    }

    /// Writes `label part` lines in node-index order.
    pub fn to_text(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for (v, p) in self.part_of.iter().enumerate() {
            let _ = writeln!(out, "{} {}", graph.label(v), p);
        }
        out
    }
}

/// Reads `node part_label` lines (`#` comments). Part labels are opaque and
/// are mapped to dense ids in order of first appearance.
pub fn load_partition<R: BufRead>(reader: R, graph: &Graph) -> Result<Partition> {
    let n = graph.node_count();
    let mut label_ids: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut assigned: Vec<Option<usize>> = vec![None; n];

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (node, part) = match tokens.as_slice() {
            [] => continue,
            [node, part] => (*node, *part),
            _ => return Err(Error::Parse { line: lineno + 1, message: "expected `node part_label`".into() }),
        };
        let v = graph.index_of(node).ok_or_else(|| Error::UnknownLabel(node.to_owned()))?;
        let next = names.len();
        let id = *label_ids.entry(part.to_owned()).or_insert(next);
        if id == next {
            names.push(part.to_owned());
        }
        match assigned[v] {
            Some(prev) if prev != id => {
                return Err(Error::ConflictingAssignment {
                    label: node.to_owned(),
                    first: names[prev].clone(),
                    second: part.to_owned(),
                })
            }
            _ => assigned[v] = Some(id),
        }
    }

    let ids = assigned
        .iter()
        .enumerate()
        .map(|(v, a)| a.ok_or_else(|| Error::Unassigned(graph.label(v).to_owned())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_assignment(&ids))
}

/// Region-growing partitioner: `k` seeds are spread out by farthest-point
/// selection in hop distance, then parts grow breadth-first in round-robin
/// order under a size cap of `ceil(n / k)`. The cap is lifted only when no
/// capped part can grow any further. Deterministic for a given `seed`.
///
/// This is a convenience for running without an external partitioner; it
/// makes no attempt to minimize cut size.
pub fn bfs_balanced_partition(graph: &Graph, k: usize, seed: u64) -> Result<Partition> {
    let n = graph.node_count();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k must be in 1..={n}, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds = spread_seeds(graph, k, rng.gen_range(0..n));

    const NONE: usize = usize::MAX;
    let mut part_of = vec![NONE; n];
    let mut sizes = vec![0usize; k];
    let mut queues: Vec<VecDeque<usize>> = vec![VecDeque::new(); k];
    for (p, &s) in seeds.iter().enumerate() {
        part_of[s] = p;
        sizes[p] = 1;
        queues[p].extend(graph.adjacent(s).map(|(v, _)| v));
    }

    let mut cap = n.div_ceil(k);
    let mut remaining = n - k;
    while remaining > 0 {
        let mut grew = false;
        for p in 0..k {
            if sizes[p] >= cap {
                continue;
            }
            while let Some(v) = queues[p].pop_front() {
                if part_of[v] == NONE {
                    part_of[v] = p;
                    sizes[p] += 1;
                    remaining -= 1;
                    queues[p].extend(graph.adjacent(v).map(|(x, _)| x));
                    grew = true;
                    break;
                }
            }
        }
        if !grew {
            if cap < n && queues.iter().any(|q| !q.is_empty()) {
                cap = n;
                continue;
            }
            // Components that received no seed go to the smallest part.
            let Some(v) = part_of.iter().position(|&p| p == NONE) else { break };
            let p = (0..k).min_by_key(|&p| (sizes[p], p)).unwrap();
            part_of[v] = p;
            sizes[p] += 1;
            remaining -= 1;
            queues[p].extend(graph.adjacent(v).map(|(x, _)| x));
        }
    }
    Ok(Partition::from_assignment(&part_of))
}

fn spread_seeds(graph: &Graph, k: usize, first: usize) -> Vec<usize> {
    let n = graph.node_count();
    let mut hops = vec![usize::MAX; n];
    let mut seeds = vec![first];
    let mut is_seed = vec![false; n];
    is_seed[first] = true;
    bfs_min_hops(graph, first, &mut hops);
    while seeds.len() < k {
        // Unreached nodes have usize::MAX hops and are preferred.
        let next = (0..n)
            .filter(|&v| !is_seed[v])
            .max_by(|&a, &b| hops[a].cmp(&hops[b]).then(b.cmp(&a)))
            .expect("k <= n leaves a non-seed node");
        seeds.push(next);
        is_seed[next] = true;
        bfs_min_hops(graph, next, &mut hops);
    }
    seeds
}

fn bfs_min_hops(graph: &Graph, source: usize, hops: &mut [usize]) {
    let mut queue = VecDeque::from([(source, 0usize)]);
    let mut seen = vec![false; hops.len()];
    seen[source] = true;
    while let Some((u, d)) = queue.pop_front() {
        hops[u] = hops[u].min(d);
        for (v, _) in graph.adjacent(u) {
            if !seen[v] && hops[v] > d + 1 {
                seen[v] = true;
                queue.push_back((v, d + 1));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn p3() -> Graph {
        load_edge_list("a b\nb c".as_bytes()).unwrap()
    }

    fn p4() -> Graph {
        load_edge_list("a b\nb c\nc d".as_bytes()).unwrap()
    }

    #[test]
    fn load_basic() {
        let g = p3();
        let p = load_partition("a 0\nb 0\nc 1".as_bytes(), &g).unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(p.parts(), [vec![0, 1], vec![2]]);
        p.validate(3).unwrap();
    }

    #[test]
    fn load_missing_node() {
        let err = load_partition("a 0\nb 0".as_bytes(), &p3()).unwrap_err();
        assert!(matches!(err, Error::Unassigned(ref l) if l == "c"));
    }

    #[test]
    fn load_single_label() {
        let p = load_partition("a x\nb x\nc x".as_bytes(), &p3()).unwrap();
        assert_eq!(p.k(), 1);
    }

    #[test]
    fn load_errors() {
        let g = p3();
        assert!(matches!(
            load_partition("a 0\nb 0\nc 1\na 1".as_bytes(), &g),
            Err(Error::ConflictingAssignment { .. })
        ));
        assert!(load_partition("a 0\nb 0\nc 1\na 0".as_bytes(), &g).is_ok());
        assert!(matches!(load_partition("z 0".as_bytes(), &g), Err(Error::UnknownLabel(_))));
        assert!(matches!(load_partition("a".as_bytes(), &g), Err(Error::Parse { .. })));
    }

    #[test]
    fn refine_trivial_partition() {
        let p = Partition::trivial(3);
        let r = p.refine_with_targets(&NodeSet::new(3, [0, 2]).unwrap());
        assert_eq!(r.parts(), [vec![1], vec![0], vec![2]]);
        r.validate(3).unwrap();
    }

    #[test]
    fn refine_all_targets() {
        let p = Partition::from_assignment(&[0, 0, 1, 1, 1]);
        let r = p.refine_with_targets(&NodeSet::all(5));
        assert_eq!(r.k(), 5);
        assert!((0..5).all(|v| r.is_singleton(v)));
    }

    #[test]
    fn refine_p4_middle() {
        let p = Partition::from_assignment(&[0, 0, 1, 1]);
        let r = p.refine_with_targets(&NodeSet::new(4, [1]).unwrap());
        assert_eq!(r.k(), 3);
        let mut parts = r.parts().to_vec();
        parts.sort();
        assert_eq!(parts, [vec![0], vec![1], vec![2, 3]]);
        assert_eq!(r.refine_with_targets(&NodeSet::new(4, [1]).unwrap()), r);
    }

    #[test]
    fn validate_rejects_bad_partitions() {
        let p = Partition::trivial(3);
        assert!(p.validate(4).is_err());
        let broken = Partition { part_of: vec![0, 0], parts: vec![vec![0, 1], vec![]] };
        assert!(broken.validate(2).is_err());
    }

    #[test]
    fn bfs_partition_basic() {
        let g = p4();
        let p = bfs_balanced_partition(&g, 2, 7).unwrap();
        p.validate(4).unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(bfs_balanced_partition(&g, 1, 0).unwrap().k(), 1);
        assert_eq!(bfs_balanced_partition(&g, 4, 0).unwrap().k(), 4);
        assert!(bfs_balanced_partition(&g, 0, 0).is_err());
        assert!(bfs_balanced_partition(&g, 5, 0).is_err());
    }

    #[test]
    fn bfs_partition_deterministic_and_connected() {
        let edges: Vec<_> = (0..29).map(|i| (i, i + 1, 1.0)).collect();
        let g = Graph::from_edges(30, edges).unwrap();
        let a = bfs_balanced_partition(&g, 3, 11).unwrap();
        assert_eq!(a, bfs_balanced_partition(&g, 3, 11).unwrap());
        for part in a.parts() {
            // On a path, a connected part is a contiguous index range.
            assert_eq!(part.last().unwrap() - part[0] + 1, part.len());
            assert!(part.len() >= 5 && part.len() <= 20, "{:?}", a.parts());
        }
    }

    #[test]
    fn bfs_partition_disconnected() {
        let g = Graph::from_edges(6, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        for k in 1..=6 {
            let p = bfs_balanced_partition(&g, k, 3).unwrap();
            p.validate(6).unwrap();
            assert_eq!(p.k(), k);
        }
    }
}
