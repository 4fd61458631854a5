use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "bcpp", version, about = "Exact betweenness centrality with partition skeletons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weighted Brandes over the target set.
    Exact(TargetArgs),
    /// Skeleton-based betweenness over the target set.
    Skeleton(SkeletonArgs),
    /// Skeleton-based betweenness over all node pairs.
    All(AllArgs),
    /// Brute-force reference (at most 200 nodes).
    Oracle(TargetArgs),
    /// Balanced BFS partition of a graph.
    Partition(PartitionArgs),
    /// Seeded synthetic graphs.
    Gen(GenArgs),
    /// Baseline vs skeleton wall-clock comparison.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Edge list: `u v [w]` per line.
    #[arg(long)]
    pub graph: PathBuf,
    /// Tolerance for equal path lengths.
    #[arg(long, default_value_t = bcpp::DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Halve scores (each unordered pair counted once).
    #[arg(long)]
    pub unordered_pairs: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    #[command(flatten)]
    pub common: Common,
    /// One node label per line.
    #[arg(long)]
    pub targets: PathBuf,
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct PartitionSource {
    /// `node part` per line.
    #[arg(long, required_unless_present = "auto_partition", conflicts_with = "auto_partition")]
    pub partition: Option<PathBuf>,
    /// Build a balanced BFS partition with this many parts.
    #[arg(long, value_name = "K")]
    pub auto_partition: Option<usize>,
    /// Seed for --auto-partition.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SkeletonArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub targets: PathBuf,
    #[command(flatten)]
    pub partition: PartitionSource,
    /// Write the skeleton edges with their tuples.
    #[arg(long, value_name = "PATH")]
    pub dump_skeleton: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AllArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub partition: PartitionSource,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub min_weight: u32,
    #[arg(long, global = true, default_value_t = 1)]
    pub max_weight: u32,
    /// Edge list destination (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write the planted partition (planted family only).
    #[arg(long, global = true, value_name = "PATH")]
    pub emit_partition: Option<PathBuf>,
    /// Also draw this many targets uniformly without replacement.
    #[arg(long, global = true, value_name = "COUNT", requires = "targets_out")]
    pub emit_targets: Option<usize>,
    #[arg(long, global = true, value_name = "PATH", requires = "emit_targets")]
    pub targets_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Planted {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        p_in: f64,
        #[arg(long)]
        p_out: f64,
    },
    ErdosRenyi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        leaves: usize,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub targets: PathBuf,
    /// Partition file; may be repeated.
    #[arg(long)]
    pub partition: Vec<PathBuf>,
    /// Balanced BFS partition with K parts; may be repeated.
    #[arg(long, value_name = "K")]
    pub auto_partition: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub repetitions: usize,
    #[arg(long, default_value_t = bcpp::DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
