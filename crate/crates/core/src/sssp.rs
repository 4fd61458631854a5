//! Shared pieces of the Dijkstra variants: the heap entry ordering and flat
//! predecessor storage.

use std::cmp::Ordering;

/// Min-heap entry for `BinaryHeap`: smallest distance first, ties broken by
/// the smaller node index so settle order is deterministic.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frontier {
    pub dist: f64,
    pub node: usize,
}

impl PartialEq for Frontier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frontier {}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        other.dist.total_cmp(&self.dist).then_with(|| other.node.cmp(&self.node))
    }
}

/// Per-node predecessor lists packed into one buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct PredecessorLists<T> {
    ranges: Vec<(usize, usize)>,
    items: Vec<T>,
}

impl<T> PredecessorLists<T> {
    pub(crate) fn new(n: usize) -> Self {
        PredecessorLists { ranges: vec![(0, 0); n], items: Vec::new() }
    }

    /// Starts the list for `v`; lists must be filled one node at a time.
    pub(crate) fn begin(&mut self, v: usize) {
        let at = self.items.len();
        self.ranges[v] = (at, at);
    }

    pub(crate) fn push(&mut self, v: usize, item: T) {
        self.items.push(item);
        self.ranges[v].1 = self.items.len();
    }

    pub fn get(&self, v: usize) -> &[T] {
        let (a, b) = self.ranges[v];
        &self.items[a..b]
    }

    pub fn node_count(&self) -> usize {
        self.ranges.len()
    }
}

#[inline]
pub(crate) fn same_length(a: f64, b: f64, epsilon: f64) -> bool {
    (a - b).abs() <= epsilon
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BinaryHeap;

    #[test]
    fn heap_pops_smallest_then_lowest_index() {
        let mut h = BinaryHeap::new();
        for (d, v) in [(2.0, 0), (1.0, 5), (1.0, 3), (0.5, 9)] {
            h.push(Frontier { dist: d, node: v });
        }
        let order: Vec<_> = std::iter::from_fn(|| h.pop().map(|f| f.node)).collect();
        assert_eq!(order, [9, 3, 5, 0]);
    }

    #[test]
    fn predecessor_lists() {
        let mut p = PredecessorLists::new(3);
        p.begin(2);
        p.push(2, 0usize);
        p.push(2, 1);
        p.begin(1);
        p.push(1, 0);
        assert_eq!(p.get(2), [0, 1]);
        assert_eq!(p.get(1), [0]);
        assert!(p.get(0).is_empty());
    }
}
