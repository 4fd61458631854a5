//! Skeleton construction.
//!
//! Every part of a partition induces a supernode. Its frontier is the set of
//! members with a neighbor in another part. The skeleton has one node per
//! frontier node and two kinds of edges:
//!
//! * cross edges: the original edges between different parts, with tuple
//!   `<w(e), 1>`;
//! * clique edges: for each pair of frontiers `f, q` of one supernode, the
//!   length and number of shortest `f`-`q` paths inside the supernode whose
//!   strict intermediates are all non-frontier nodes. Pairs without such a
//!   path get no edge.
//!
//! The same frontier-restricted searches also yield, for every interior node
//! `v`, the distance and path count from each frontier of its supernode.
//! Those tables are kept for recovering interior centralities later.

use std::collections::BinaryHeap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::partition::Partition;
use crate::sssp::{same_length, Frontier};
use crate::Options;

const NONE: usize = usize::MAX;

/// Subgraph induced by one part, with a local CSR over positions in the
/// part's sorted member list.
#[derive(Debug, Clone)]
pub struct Supernode {
    pub part: usize,
    nodes: Vec<usize>,
    is_frontier: Vec<bool>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
}

impl Supernode {
    /// Members in ascending global index order.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn frontier(&self) -> Vec<usize> {
        self.locals_where(true)
    }

    pub fn interior(&self) -> Vec<usize> {
        self.locals_where(false)
    }

    fn locals_where(&self, frontier: bool) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&l| self.is_frontier[l] == frontier).map(|l| self.nodes[l]).collect()
    }

    pub fn is_frontier(&self, v: usize) -> bool {
        self.local(v).is_some_and(|l| self.is_frontier[l])
    }

    /// Induced edges, each once, as global `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.nodes.len()).flat_map(move |a| {
            self.local_adjacent(a).filter(move |&(b, _)| a < b).map(move |(b, w)| (self.nodes[a], self.nodes[b], w))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    fn local(&self, v: usize) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }

    #[inline]
    fn local_adjacent(&self, a: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.offsets[a]..self.offsets[a + 1];
        self.targets[r.clone()].iter().copied().zip(self.weights[r].iter().copied())
    }
}

/// Splits the graph into supernodes, one per part, and marks frontiers.
pub fn find_frontiers(graph: &Graph, partition: &Partition) -> Vec<Supernode> {
    let n = graph.node_count();
    let mut local = vec![NONE; n];
    for part in partition.parts() {
        for (l, &v) in part.iter().enumerate() {
            local[v] = l;
        }
    }
    partition
        .parts()
        .iter()
        .enumerate()
        .map(|(i, members)| {
            let mut is_frontier = vec![false; members.len()];
            let mut offsets = Vec::with_capacity(members.len() + 1);
            let mut targets = Vec::new();
            let mut weights = Vec::new();
            offsets.push(0);
            for (l, &v) in members.iter().enumerate() {
                for (u, w) in graph.adjacent(v) {
                    if partition.part_of(u) == i {
                        targets.push(local[u]);
                        weights.push(w);
                    } else {
                        is_frontier[l] = true;
                    }
                }
                offsets.push(targets.len());
            }
            Supernode { part: i, nodes: members.clone(), is_frontier, offsets, targets, weights }
        })
        .collect()
}

/// Distances and path counts from one frontier, over a supernode's members
/// in local (sorted member) order.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierPaths {
    pub source: usize,
    pub dist: Vec<f64>,
    pub sigma: Vec<f64>,
}

/// Frontier-restricted Dijkstra inside a supernode from frontier `source`
/// (a global index).
///
/// Only paths whose strict intermediates are non-frontier nodes are counted:
/// other frontiers are settled but never expanded, while the source itself
/// is always a valid predecessor. `sigma` at the source is 1.
pub fn dijkstra_sk(supernode: &Supernode, source: usize, options: &Options) -> Result<FrontierPaths> {
    let local = supernode.local(source).filter(|&l| supernode.is_frontier[l]).ok_or(Error::NotInSkeleton(source))?;
    let (dist, sigma) = frontier_search(supernode, local, options.epsilon);
    Ok(FrontierPaths { source, dist, sigma })
}

fn frontier_search(sn: &Supernode, src: usize, eps: f64) -> (Vec<f64>, Vec<f64>) {
    let len = sn.nodes.len();
    let expands = |u: usize| u == src || !sn.is_frontier[u];
    let mut dist = vec![f64::INFINITY; len];
    let mut rank = vec![NONE; len];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();
    dist[src] = 0.0;
    heap.push(Frontier { dist: 0.0, node: src });
    while let Some(Frontier { dist: d, node: u }) = heap.pop() {
        if rank[u] != NONE || d > dist[u] {
            continue;
        }
        rank[u] = order.len();
        order.push(u);
        if !expands(u) {
            continue;
        }
        for (v, w) in sn.local_adjacent(u) {
            let nd = d + w;
            if rank[v] == NONE && nd < dist[v] {
                dist[v] = nd;
                heap.push(Frontier { dist: nd, node: v });
            }
        }
    }
    let mut sigma = vec![0.0; len];
    sigma[src] = 1.0;
    for &v in &order[1..] {
        sigma[v] = sn
            .local_adjacent(v)
            .filter(|&(u, w)| expands(u) && rank[u] < rank[v] && same_length(dist[u] + w, dist[v], eps))
            .map(|(u, _)| sigma[u])
            .sum();
    }
    (dist, sigma)
}

/// Length and multiplicity carried by a skeleton edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharTuple {
    pub dist: f64,
    pub mult: f64,
}

/// Per-supernode output of the frontier searches. Shared between skeletons
/// built from partitions that differ only in other parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SupernodeTables {
    /// Frontier nodes, ascending global index.
    pub frontier: Vec<usize>,
    /// Interior nodes, ascending global index.
    pub interior: Vec<usize>,
    /// Row-major `|F| x |F|` clique tuples; `None` without an admissible path.
    clique: Vec<Option<CharTuple>>,
    /// Row-major `|I| x |F|`: entry `(v, f)` is `d(f, v)` within the supernode.
    interior_dist: Vec<f64>,
    interior_sigma: Vec<f64>,
    pub elapsed: Duration,
}

impl SupernodeTables {
    pub fn compute(sn: &Supernode, options: &Options) -> Self {
        let start = Instant::now();
        let frontier_locals: Vec<usize> = (0..sn.nodes.len()).filter(|&l| sn.is_frontier[l]).collect();
        let interior_locals: Vec<usize> = (0..sn.nodes.len()).filter(|&l| !sn.is_frontier[l]).collect();
        let nf = frontier_locals.len();
        let ni = interior_locals.len();
        let mut clique = vec![None; nf * nf];
        let mut interior_dist = vec![f64::INFINITY; ni * nf];
        let mut interior_sigma = vec![0.0; ni * nf];
        for (a, &fl) in frontier_locals.iter().enumerate() {
            let (dist, sigma) = frontier_search(sn, fl, options.epsilon);
            for (b, &ql) in frontier_locals.iter().enumerate() {
                if a != b && dist[ql].is_finite() {
                    clique[a * nf + b] = Some(CharTuple { dist: dist[ql], mult: sigma[ql] });
                }
            }
            for (r, &vl) in interior_locals.iter().enumerate() {
                interior_dist[r * nf + a] = dist[vl];
                interior_sigma[r * nf + a] = sigma[vl];
            }
        }
        SupernodeTables {
            frontier: frontier_locals.iter().map(|&l| sn.nodes[l]).collect(),
            interior: interior_locals.iter().map(|&l| sn.nodes[l]).collect(),
            clique,
            interior_dist,
            interior_sigma,
            elapsed: start.elapsed(),
        }
    }

    /// Tables for a one-node part, which needs no search.
    pub fn singleton(graph: &Graph, v: usize) -> Self {
        let has_edges = graph.adjacent(v).next().is_some();
        let (frontier, interior) = if has_edges { (vec![v], vec![]) } else { (vec![], vec![v]) };
        SupernodeTables {
            frontier,
            interior,
            clique: if has_edges { vec![None] } else { vec![] },
            interior_dist: vec![],
            interior_sigma: vec![],
            elapsed: Duration::ZERO,
        }
    }

    /// Clique tuple between the `a`-th and `b`-th frontier.
    pub fn clique_tuple(&self, a: usize, b: usize) -> Option<CharTuple> {
        self.clique[a * self.frontier.len() + b]
    }

    /// `(d(f, v), sigma(f, v))` for every frontier `f`, for the `r`-th
    /// interior node.
    pub fn interior_row(&self, r: usize) -> (&[f64], &[f64]) {
        let nf = self.frontier.len();
        (&self.interior_dist[r * nf..(r + 1) * nf], &self.interior_sigma[r * nf..(r + 1) * nf])
    }
}

/// Frontier graph with characteristic tuples and the interior tables.
#[derive(Debug, Clone)]
pub struct Skeleton {
    node_of: Vec<usize>,
    sk_index: Vec<usize>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    tuples: Vec<CharTuple>,
    cross_edges: usize,
    clique_edges: usize,
    partition: Partition,
    supernodes: Vec<Arc<SupernodeTables>>,
    frontier_sk: Vec<Vec<usize>>,
}

impl Skeleton {
    /// Assembles a skeleton from `partition` and precomputed tables, where
    /// `tables[i]` belongs to part `i`.
    pub fn assemble(graph: &Graph, partition: Partition, tables: Vec<Arc<SupernodeTables>>) -> Self {
        assert_eq!(tables.len(), partition.k(), "one table per part");
        let n = graph.node_count();
        let mut sk_index = vec![NONE; n];
        for t in &tables {
            for &f in &t.frontier {
                sk_index[f] = 0;
            }
        }
        let mut node_of = Vec::new();
        for (v, slot) in sk_index.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = node_of.len();
                node_of.push(v);
            }
        }

        let mut rows: Vec<Vec<(usize, CharTuple)>> = vec![Vec::new(); node_of.len()];
        let mut cross_edges = 0;
        for (u, v, w) in graph.edges() {
            if partition.part_of(u) != partition.part_of(v) {
                let t = CharTuple { dist: w, mult: 1.0 };
                rows[sk_index[u]].push((sk_index[v], t));
                rows[sk_index[v]].push((sk_index[u], t));
                cross_edges += 1;
            }
        }
        let mut clique_edges = 0;
        let mut frontier_sk = Vec::with_capacity(tables.len());
        for t in &tables {
            let fs: Vec<usize> = t.frontier.iter().map(|&f| sk_index[f]).collect();
            for a in 0..fs.len() {
                for b in 0..fs.len() {
                    if a == b {
                        continue;
                    }
                    if let Some(tuple) = t.clique_tuple(a, b) {
                        rows[fs[a]].push((fs[b], tuple));
                        if a < b {
                            clique_edges += 1;
                        }
                    }
                }
            }
            frontier_sk.push(fs);
        }

        let mut offsets = Vec::with_capacity(rows.len() + 1);
        let mut targets = Vec::new();
        let mut tuples = Vec::new();
        offsets.push(0);
        for row in &mut rows {
            row.sort_unstable_by_key(|&(x, _)| x);
            for &(x, t) in row.iter() {
                targets.push(x);
                tuples.push(t);
            }
            offsets.push(targets.len());
        }

        Skeleton {
            node_of,
            sk_index,
            offsets,
            targets,
            tuples,
            cross_edges,
            clique_edges,
            partition,
            supernodes: tables,
            frontier_sk,
        }
    }

    /// Skeleton over `n` original nodes whose edges are given directly, each
    /// node forming its own part. Nodes without edges are left out.
    pub fn from_tuples(n: usize, edges: &[(usize, usize, CharTuple)]) -> Result<Self> {
        let mut touched = vec![false; n];
        for &(u, v, t) in edges {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange { index: u.max(v), n });
            }
            if u == v || t.dist.is_nan() || t.dist <= 0.0 || t.mult.is_nan() || t.mult < 1.0 {
                return Err(Error::InvalidParameter(format!("bad skeleton edge ({u},{v})")));
            }
            touched[u] = true;
            touched[v] = true;
        }
        let plain = Graph::from_edges(n, edges.iter().map(|&(u, v, t)| (u, v, t.dist)))?;
        let tables = (0..n)
            .map(|v| {
                let (frontier, interior) = if touched[v] { (vec![v], vec![]) } else { (vec![], vec![v]) };
                let clique = if touched[v] { vec![None] } else { vec![] };
                Arc::new(SupernodeTables {
                    frontier,
                    interior,
                    clique,
                    interior_dist: vec![],
                    interior_sigma: vec![],
                    elapsed: Duration::ZERO,
                })
            })
            .collect();
        let mut sk = Skeleton::assemble(&plain, Partition::singletons(n), tables);
        for x in 0..sk.node_count() {
            let u = sk.node_of[x];
            for slot in sk.offsets[x]..sk.offsets[x + 1] {
                let v = sk.node_of[sk.targets[slot]];
                let &(_, _, t) = edges
                    .iter()
                    .find(|&&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u))
                    .expect("edge came from the list");
                sk.tuples[slot] = t;
            }
        }
        Ok(sk)
    }

    pub fn node_count(&self) -> usize {
        self.node_of.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn cross_edge_count(&self) -> usize {
        self.cross_edges
    }

    pub fn clique_edge_count(&self) -> usize {
        self.clique_edges
    }

    /// Original node of skeleton node `x`.
    pub fn graph_node(&self, x: usize) -> usize {
        self.node_of[x]
    }

    pub fn graph_nodes(&self) -> &[usize] {
        &self.node_of
    }

    /// Skeleton index of original node `v`, if it is a frontier.
    pub fn skeleton_node(&self, v: usize) -> Option<usize> {
        self.sk_index.get(v).copied().filter(|&x| x != NONE)
    }

    pub fn graph_node_count(&self) -> usize {
        self.sk_index.len()
    }

    #[inline]
    pub fn adjacent(&self, x: usize) -> impl Iterator<Item = (usize, CharTuple)> + '_ {
        let r = self.offsets[x]..self.offsets[x + 1];
        self.targets[r.clone()].iter().copied().zip(self.tuples[r].iter().copied())
    }

    /// Edges once each, as skeleton `(x, y, tuple)` with `x < y`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, CharTuple)> + '_ {
        (0..self.node_count())
            .flat_map(move |x| self.adjacent(x).filter(move |&(y, _)| x < y).map(move |(y, t)| (x, y, t)))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn supernodes(&self) -> &[Arc<SupernodeTables>] {
        &self.supernodes
    }

    /// Skeleton indices of the frontier of part `i`, aligned with
    /// `supernodes()[i].frontier`.
    pub fn frontier_skeleton_nodes(&self, i: usize) -> &[usize] {
        &self.frontier_sk[i]
    }

    /// Build time of the slowest supernode, the critical path when
    /// supernodes are processed in parallel.
    pub fn slowest_supernode_time(&self) -> Duration {
        self.supernodes.iter().map(|t| t.elapsed).max().unwrap_or_default()
    }

    /// Annotated edge list `f q dist mult`, one line per skeleton edge.
    pub fn dump(&self, graph: &Graph) -> String {
        let mut out = String::from("# f q dist mult\n");
        for (x, y, t) in self.edges() {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                graph.label(self.node_of[x]),
                graph.label(self.node_of[y]),
                t.dist,
                t.mult
            );
        }
        out
    }
}

/// Builds the skeleton for a partition in which every target is already a
/// singleton part. Supernode searches run in parallel.
pub fn build_skeleton(graph: &Graph, partition: &Partition, targets: &NodeSet, options: &Options) -> Result<Skeleton> {
    partition.validate(graph.node_count())?;
    if let Some(&t) = targets.members().iter().find(|&&t| !partition.is_singleton(t)) {
        return Err(Error::TargetNotSingleton(t));
    }
    let tables = compute_tables(graph, partition, options);
    Ok(Skeleton::assemble(graph, partition.clone(), tables))
}

pub(crate) fn compute_tables(graph: &Graph, partition: &Partition, options: &Options) -> Vec<Arc<SupernodeTables>> {
    let supernodes = find_frontiers(graph, partition);
    supernodes
        .par_iter()
        .map(|sn| {
            if sn.nodes.len() == 1 {
                Arc::new(SupernodeTables::singleton(graph, sn.nodes[0]))
            } else {
                Arc::new(SupernodeTables::compute(sn, options))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn g(text: &str) -> Graph {
        load_edge_list(text.as_bytes()).unwrap()
    }

    fn two_triangles() -> Graph {
        // x = 2, y = 3
        g("a b\nb x\nx a\nx y\ny c\nc d\nd y")
    }

    #[test]
    fn frontiers_of_bridge() {
        let gr = two_triangles();
        let p = Partition::from_assignment(&[0, 0, 0, 1, 1, 1]);
        let sns = find_frontiers(&gr, &p);
        assert_eq!(sns[0].frontier(), [2]);
        assert_eq!(sns[1].frontier(), [3]);
        assert_eq!(sns[0].edge_count(), 3);
        assert_eq!(sns[0].edges().collect::<Vec<_>>(), [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]);
    }

    #[test]
    fn no_frontiers_for_single_part() {
        let gr = two_triangles();
        let sns = find_frontiers(&gr, &Partition::trivial(6));
        assert!(sns.iter().all(|s| s.frontier().is_empty()));
    }

    #[test]
    fn singletons_are_frontiers_unless_isolated() {
        let gr = Graph::from_edges(4, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let sns = find_frontiers(&gr, &Partition::singletons(4));
        let frontier: Vec<bool> = sns.iter().map(|s| !s.frontier().is_empty()).collect();
        assert_eq!(frontier, [true, true, true, false]);
    }

    fn supernode_of(gr: &Graph, extra_frontier: &[&str]) -> Supernode {
        // Put every listed node in part 0; attach each requested frontier
        // to a private outside node so it sees another part.
        let mut text = String::new();
        for (u, v, w) in gr.edges() {
            let _ = writeln!(text, "{} {} {}", gr.label(u), gr.label(v), w);
        }
        for (i, f) in extra_frontier.iter().enumerate() {
            let _ = writeln!(text, "{f} out{i} 1");
        }
        let full = g(&text);
        let ids: Vec<usize> =
            (0..full.node_count()).map(|v| usize::from(full.label(v).starts_with("out")) * (v + 1)).collect();
        let p = Partition::from_assignment(&ids);
        find_frontiers(&full, &p).remove(0)
    }

    #[test]
    fn dijkstra_sk_counts_direct_and_interior_route() {
        let sn = supernode_of(&g("f x 1\nx q 1\nf q 2"), &["f", "q"]);
        let paths = dijkstra_sk(&sn, 0, &Options::default()).unwrap();
        // locals: f=0, x=1, q=2
        assert_eq!(paths.dist[2], 2.0);
        assert_eq!(paths.sigma[2], 2.0);
        assert_eq!(paths.sigma[0], 1.0);
    }

    #[test]
    fn dijkstra_sk_excludes_frontier_intermediates() {
        let sn = supernode_of(&g("f g 1\ng q 1\nf q 2"), &["f", "g", "q"]);
        let paths = dijkstra_sk(&sn, 0, &Options::default()).unwrap();
        assert_eq!((paths.dist[2], paths.sigma[2]), (2.0, 1.0));
        assert_eq!((paths.dist[1], paths.sigma[1]), (1.0, 1.0));
    }

    #[test]
    fn dijkstra_sk_rejects_non_frontier_source() {
        let sn = supernode_of(&g("f x 1\nx q 1"), &["f", "q"]);
        assert!(dijkstra_sk(&sn, 1, &Options::default()).is_err());
    }

    #[test]
    fn singleton_target_has_no_tuples() {
        let gr = g("s a\na b");
        let p = Partition::from_assignment(&[0, 1, 1]);
        let sk = build_skeleton(&gr, &p, &NodeSet::new(3, [0]).unwrap(), &Options::default()).unwrap();
        let t = &sk.supernodes()[0];
        assert_eq!(t.frontier, [0]);
        assert!(t.interior.is_empty());
        assert_eq!(t.clique_tuple(0, 0), None);
    }

    #[test]
    fn clique_replaces_supernode() {
        // Part 0 = {1,2,3,m}; frontiers 1,2,3 each attached to an outside
        // node; m is a hub joined to every frontier.
        let gr = g("1 m\n2 m\n3 m\n1 2 3\n1 a\n2 b\n3 c");
        let p = load_partition_text(&gr, "1 0\n2 0\n3 0\nm 0\na 1\nb 2\nc 3");
        let sk = build_skeleton(&gr, &p, &NodeSet::empty(gr.node_count()), &Options::default()).unwrap();
        assert_eq!(sk.node_count(), 6);
        assert_eq!(sk.cross_edge_count(), 3);
        assert_eq!(sk.clique_edge_count(), 3);
        let label = |x: usize| gr.label(sk.graph_node(x)).to_owned();
        let mut cl: Vec<(String, String, f64, f64)> = sk
            .edges()
            .filter(|(x, y, _)| {
                !["a", "b", "c"].contains(&label(*x).as_str()) && !["a", "b", "c"].contains(&label(*y).as_str())
            })
            .map(|(x, y, t)| (label(x), label(y), t.dist, t.mult))
            .collect();
        cl.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(
            cl,
            [
                ("1".into(), "2".into(), 2.0, 1.0),
                ("1".into(), "3".into(), 2.0, 1.0),
                ("2".into(), "3".into(), 2.0, 1.0)
            ]
        );
        // Interior hub: one step from every frontier.
        let t = &sk.supernodes()[0];
        let (d, s) = t.interior_row(0);
        assert_eq!(d, [1.0, 1.0, 1.0]);
        assert_eq!(s, [1.0, 1.0, 1.0]);
    }

    fn load_partition_text(gr: &Graph, text: &str) -> Partition {
        crate::partition::load_partition(text.as_bytes(), gr).unwrap()
    }

    #[test]
    fn all_singletons_reproduce_graph() {
        let gr = g("a b 2\nb c 1\nc a 5\nc d 1");
        let sk = build_skeleton(&gr, &Partition::singletons(4), &NodeSet::all(4), &Options::default()).unwrap();
        assert_eq!(sk.node_count(), 4);
        assert_eq!(sk.clique_edge_count(), 0);
        let edges: Vec<_> = sk.edges().map(|(x, y, t)| (sk.graph_node(x), sk.graph_node(y), t.dist, t.mult)).collect();
        let expected: Vec<_> = gr.edges().map(|(u, v, w)| (u, v, w, 1.0)).collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn non_singleton_target_rejected() {
        let gr = two_triangles();
        let err = build_skeleton(&gr, &Partition::trivial(6), &NodeSet::new(6, [0]).unwrap(), &Options::default());
        assert!(matches!(err, Err(Error::TargetNotSingleton(0))));
    }

    #[test]
    fn missing_clique_pair_gets_no_edge() {
        // f and q sit in one part but are only connected through another part.
        let gr = g("f o\no q");
        let p = Partition::from_assignment(&[0, 1, 0]);
        let sk = build_skeleton(&gr, &p, &NodeSet::empty(3), &Options::default()).unwrap();
        assert_eq!(sk.clique_edge_count(), 0);
        assert_eq!(sk.edge_count(), 2);
    }

    #[test]
    fn dump_lists_edges() {
        let gr = g("a b 2");
        let sk = build_skeleton(&gr, &Partition::singletons(2), &NodeSet::all(2), &Options::default()).unwrap();
        assert_eq!(sk.dump(&gr), "# f q dist mult\na b 2 1\n");
    }
}
