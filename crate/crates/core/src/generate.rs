//! Seeded synthetic graphs and target sets.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::partition::Partition;

/// Inclusive integer weight range; each edge draws uniformly from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightRange {
    pub min: u32,
    pub max: u32,
}

impl WeightRange {
    pub const UNIT: WeightRange = WeightRange { min: 1, max: 1 };

    pub fn new(min: u32, max: u32) -> Result<Self> {
        if min == 0 || min > max {
            return Err(Error::InvalidParameter(format!("weight range {min}..={max} must satisfy 1 <= min <= max")));
        }
        Ok(WeightRange { min, max })
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        if self.min == self.max {
            self.min as f64
        } else {
            rng.gen_range(self.min..=self.max) as f64
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be in [0, 1], got {p}")))
    }
}

/// `k` communities of `size` nodes each; node `v` belongs to community
/// `v / size`. Pairs inside a community are joined with probability `p_in`,
/// pairs across communities with `p_out`. Returns the planted partition too.
pub fn planted_partition(
    k: usize,
    size: usize,
    p_in: f64,
    p_out: f64,
    weights: WeightRange,
    seed: u64,
) -> Result<(Graph, Partition)> {
    if k == 0 || size == 0 {
        return Err(Error::InvalidParameter("planted partition needs k >= 1 and size >= 1".into()));
    }
    check_probability("p_in", p_in)?;
    check_probability("p_out", p_out)?;
    let n = k * size;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if u / size == v / size { p_in } else { p_out };
            if p > 0.0 && rng.gen_bool(p) {
                edges.push((u, v, weights.draw(&mut rng)));
            }
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    let ids: Vec<usize> = (0..n).map(|v| v / size).collect();
    Ok((graph, Partition::from_assignment(&ids)))
}

/// G(n, p).
pub fn erdos_renyi(n: usize, p: f64, weights: WeightRange, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("erdos-renyi needs n >= 1".into()));
    }
    check_probability("p", p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if p > 0.0 && rng.gen_bool(p) {
                edges.push((u, v, weights.draw(&mut rng)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v, 1.0)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n, 1.0)))
}

/// Node 0 is the center.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v, 1.0)))
}

/// `count` distinct nodes drawn uniformly without replacement.
pub fn random_targets(n: usize, count: usize, seed: u64) -> Result<NodeSet> {
    if count > n {
        return Err(Error::InvalidParameter(format!("cannot draw {count} targets from {n} nodes")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    NodeSet::new(n, sample(&mut rng, n, count))
}

/// Uniform random assignment of `n` nodes to at most `k` parts (empty parts
/// are compacted away).
pub fn random_partition(n: usize, k: usize, seed: u64) -> Result<Partition> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    Ok(Partition::from_assignment(&ids))
}
