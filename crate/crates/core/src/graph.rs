//! Immutable weighted undirected graphs over dense node indices.
//!
//! Adjacency is stored in compressed sparse row form with every undirected
//! edge present in both directions and each row sorted by neighbor index.
//! External node labels are kept in an id map so results can be reported
//! against the labels that appeared in the input.
//!
//! Path counts downstream are carried as `f64`; they stay exact while they
//! remain below 2^53.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph whose labels are the decimal node indices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Builds a graph from explicit labels and an edge iterator over dense
    /// indices. Duplicate undirected edges keep the minimum weight.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate node label `{label}`")));
            }
        }
        let mut unique: HashMap<(usize, usize), f64> = HashMap::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::NodeOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, label: labels[u].clone() });
            }
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::NonPositiveWeight { line: 0, weight: w });
            }
            let key = (u.min(v), u.max(v));
            unique.entry(key).and_modify(|old| *old = old.min(w)).or_insert(w);
        }
        Ok(Self::assemble(labels, index, unique))
    }

    fn assemble(labels: Vec<String>, index: HashMap<String, usize>, unique: HashMap<(usize, usize), f64>) -> Self {
        let n = labels.len();
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for (&(u, v), &w) in &unique {
            rows[u].push((v, w));
            rows[v].push((u, w));
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * unique.len());
        let mut weights = Vec::with_capacity(2 * unique.len());
        offsets.push(0);
        for row in &mut rows {
            row.sort_unstable_by_key(|&(v, _)| v);
            for &(v, w) in row.iter() {
                targets.push(v);
                weights.push(w);
            }
            offsets.push(targets.len());
        }
        Graph { offsets, targets, weights, labels, index }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> Result<Vec<(usize, f64)>> {
        self.check(v)?;
        Ok(self.adjacent(v).collect())
    }

    /// Unchecked neighbor iteration for hot loops; panics if `v >= n`.
    #[inline]
    pub fn adjacent(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()].iter().copied().zip(self.weights[range].iter().copied())
    }

    /// Each undirected edge once, as `(u, v, w)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.node_count())
            .flat_map(move |u| self.adjacent(u).filter(move |&(v, _)| u < v).map(move |(v, w)| (u, v, w)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.weights.iter().copied().reduce(f64::min)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.node_count() {
            return Err(Error::NodeOutOfRange { index: v, n: self.node_count() });
        }
        Ok(())
    }

    /// Checks the structural invariants: symmetric adjacency with identical
    /// weights, positive weights, no self-loops or duplicate entries, and a
    /// consistent id map.
    pub fn validate(&self) -> Result<()> {
        let n = self.node_count();
        let broken = |msg: String| Err(Error::InvalidParameter(msg));
        if self.index.len() != n {
            return broken("id map is not a bijection".into());
        }
        for (label, &i) in &self.index {
            if i >= n || self.labels[i] != *label {
                return broken(format!("id map entry `{label}` is inconsistent"));
            }
        }
        for u in 0..n {
            let mut last = None;
            for (v, w) in self.adjacent(u) {
                if v == u {
                    return broken(format!("self-loop at {u}"));
                }
                if last.is_some_and(|l| l >= v) {
                    return broken(format!("row {u} unsorted or duplicated"));
                }
                last = Some(v);
                if w.is_nan() || w <= 0.0 {
                    return broken(format!("non-positive weight on ({u},{v})"));
                }
                let back = self.adjacent(v).find(|&(x, _)| x == u);
                if back.map(|(_, bw)| bw) != Some(w) {
                    return broken(format!("edge ({u},{v}) is not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Serializes to the edge-list format read by [`load_edge_list`].
    /// Isolated nodes are written as single-label lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.node_count() {
            if self.offsets[v] == self.offsets[v + 1] {
                let _ = writeln!(out, "{}", self.labels[v]);
            }
        }
        for (u, v, w) in self.edges() {
            let _ = writeln!(out, "{} {} {}", self.labels[u], self.labels[v], w);
        }
        out
    }
}

/// Reads an edge list: one `u v [w]` per line, `#` starts a comment, labels
/// are opaque tokens and `w` defaults to 1. A line with a single label
/// declares a node without edges.
///
/// Labels get dense indices in order of first appearance. Repeated
/// undirected edges collapse to the minimum weight.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut unique: HashMap<(usize, usize), f64> = HashMap::new();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&i) = index.get(label) {
            return i;
        }
        let i = labels.len();
        labels.push(label.to_owned());
        index.insert(label.to_owned(), i);
        i
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            [u] => {
                intern(u, &mut labels);
            }
            [u, v, rest @ ..] if rest.len() <= 1 => {
                let w = match rest.first() {
                    None => 1.0,
                    Some(tok) => tok
                        .parse::<f64>()
                        .map_err(|_| Error::Parse { line: lineno, message: format!("invalid weight `{tok}`") })?,
                };
                if u == v {
                    return Err(Error::SelfLoop { line: lineno, label: (*u).to_owned() });
                }
                if !(w > 0.0 && w.is_finite()) {
                    return Err(Error::NonPositiveWeight { line: lineno, weight: w });
                }
                let a = intern(u, &mut labels);
                let b = intern(v, &mut labels);
                unique.entry((a.min(b), a.max(b))).and_modify(|old| *old = old.min(w)).or_insert(w);
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected `u v [w]`, found {} fields", tokens.len()),
                })
            }
        }
    }
    let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    Ok(Graph::assemble(labels, index, unique))
}

/// A set of distinct node indices, kept sorted, with O(1) membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl NodeSet {
    /// Duplicates are dropped; any member `>= n` is an error.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut mask = vec![false; n];
        for v in members {
            if v >= n {
                return Err(Error::NodeOutOfRange { index: v, n });
            }
            mask[v] = true;
        }
        let members = (0..n).filter(|&v| mask[v]).collect();
        Ok(NodeSet { members, mask })
    }

    pub fn all(n: usize) -> Self {
        NodeSet { members: (0..n).collect(), mask: vec![true; n] }
    }

    pub fn empty(n: usize) -> Self {
        NodeSet { members: Vec::new(), mask: vec![false; n] }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }
}

/// Reads a node-label list (one label per line, `#` comments) into a set.
pub fn load_node_set<R: BufRead>(reader: R, graph: &Graph) -> Result<NodeSet> {
    let mut members = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let content = line.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(label) = tokens.next() else { continue };
        if tokens.next().is_some() {
            return Err(Error::Parse { line: lineno + 1, message: "expected a single node label".into() });
        }
        let v = graph.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_owned()))?;
        members.push(v);
    }
    NodeSet::new(graph.node_count(), members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<Graph> {
        load_edge_list(text.as_bytes())
    }

    #[test]
    fn default_weight_path() {
        let g = load("a b\nb c").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.edges().all(|(_, _, w)| w == 1.0));
        assert_eq!(g.labels(), ["a", "b", "c"]);
        g.validate().unwrap();
    }

    #[test]
    fn duplicate_edges_keep_minimum() {
        let g = load("a b 2\nb a 3").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 2.0)]);
    }

    #[test]
    fn self_loop_rejected_with_line() {
        let err = load("# header\na a 1").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 2, .. }), "{err}");
    }

    #[test]
    fn bad_weights_rejected() {
        assert!(matches!(load("a b 0").unwrap_err(), Error::NonPositiveWeight { line: 1, .. }));
        assert!(matches!(load("a b\nb c -1").unwrap_err(), Error::NonPositiveWeight { line: 2, .. }));
        assert!(matches!(load("a b nan").unwrap_err(), Error::NonPositiveWeight { .. }));
        assert!(matches!(load("a b x").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(matches!(load("a b 1 2").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load("# c\n\n  a b 1.5 # trailing\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 1.5)]);
    }

    #[test]
    fn degree_and_neighbors() {
        let p3 = load("a b\nb c").unwrap();
        assert_eq!(p3.degree(1).unwrap(), 2);
        assert!(matches!(p3.degree(5), Err(Error::NodeOutOfRange { index: 5, n: 3 })));
        assert!(p3.neighbors(5).is_err());

        let star = load("c l1\nc l2\nc l3\nc l4").unwrap();
        assert_eq!(star.degree(0).unwrap(), 4);
        let nbrs = star.neighbors(0).unwrap();
        assert!(nbrs.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn isolated_nodes_round_trip() {
        let g = Graph::from_edges(4, [(0, 2, 1.0)]).unwrap();
        let back = load(&g.to_edge_list()).unwrap();
        assert_eq!(back.node_count(), 4);
        assert_eq!(back.degree(back.index_of("1").unwrap()).unwrap(), 0);
    }

    #[test]
    fn builder_rejects_invalid_edges() {
        assert!(Graph::from_edges(2, [(0, 0, 1.0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2, 1.0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1, 0.0)]).is_err());
    }

    #[test]
    fn node_set_loading() {
        let g = load("a b\nb c").unwrap();
        let s = load_node_set("c\n# x\na\na\n".as_bytes(), &g).unwrap();
        assert_eq!(s.members(), [0, 2]);
        assert!(s.contains(2) && !s.contains(1));
        assert!(matches!(load_node_set("z".as_bytes(), &g), Err(Error::UnknownLabel(_))));
        assert!(NodeSet::new(3, [3]).is_err());
    }
}
