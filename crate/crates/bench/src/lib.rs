//! Fixed benchmark instances.

use bcpp::generate::{planted_partition, random_targets, WeightRange};
use bcpp::{Graph, NodeSet, Partition};

pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub partition: Partition,
    pub targets: NodeSet,
}

/// Planted communities of `size` nodes with `p_in = 0.1`, a handful of
/// inter-community edges and `targets` random target nodes.
pub fn planted(k: usize, size: usize, p_out: f64, targets: usize, seed: u64) -> Instance {
    let (graph, partition) =
        planted_partition(k, size, 0.1, p_out, WeightRange::UNIT, seed).expect("valid planted parameters");
    let targets = random_targets(graph.node_count(), targets, seed + 1).expect("enough nodes");
    Instance { name: format!("planted_{k}x{size}_s{}", targets.len()), graph, partition, targets }
}

pub fn standard() -> Vec<Instance> {
    vec![planted(10, 100, 1e-4, 20, 7), planted(20, 100, 5e-5, 100, 2024)]
}
