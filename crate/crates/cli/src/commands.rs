use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use bcpp::generate::{self, WeightRange};
use bcpp::parallel::with_threads;
use bcpp::{
    bfs_balanced_partition, brandes, brandes_pp_all_timed, brandes_pp_timed, build_skeleton, load_edge_list,
    load_node_set, load_partition, oracle_betweenness, CentralityVector, Graph, NodeSet, Options, Partition,
    PhaseTimings,
};

use crate::args::{
    AllArgs, BenchArgs, Cli, Command, Common, Family, GenArgs, PartitionArgs, PartitionSource, SkeletonArgs, TargetArgs,
};
use crate::format::{centrality_csv, significant};

/// A well-formed command line that asks for something inconsistent.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    UsageError(message.into()).into()
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Exact(args) => exact(args),
        Command::Skeleton(args) => skeleton(args),
        Command::All(args) => all(args),
        Command::Oracle(args) => oracle(args),
        Command::Partition(args) => partition(args),
        Command::Gen(args) => gen(args),
        Command::Bench(args) => bench(args),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(file))
}

fn read_graph(path: &Path) -> Result<Graph> {
    load_edge_list(open(path)?).with_context(|| format!("invalid graph {}", path.display()))
}

fn read_targets(path: &Path, graph: &Graph) -> Result<NodeSet> {
    load_node_set(open(path)?, graph).with_context(|| format!("invalid target set {}", path.display()))
}

fn read_partition(path: &Path, graph: &Graph) -> Result<Partition> {
    load_partition(open(path)?, graph).with_context(|| format!("invalid partition {}", path.display()))
}

fn resolve_partition(source: &PartitionSource, graph: &Graph) -> Result<Partition> {
    match (&source.partition, source.auto_partition) {
        (Some(path), _) => read_partition(path, graph),
        (None, Some(k)) => Ok(bfs_balanced_partition(graph, k, source.seed)?),
        (None, None) => Err(usage("one of --partition or --auto-partition is required")),
    }
}

fn options(epsilon: f64) -> Result<Options> {
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(usage(format!("--epsilon must be a finite non-negative number, got {epsilon}")));
    }
    Ok(Options { epsilon })
}

fn write_text(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn emit_centrality(common: &Common, graph: &Graph, centrality: CentralityVector) -> Result<()> {
    let centrality = if common.unordered_pairs { centrality.into_unordered() } else { centrality };
    write_text(common.out.as_ref(), &centrality_csv(graph, &centrality))
}

fn report_timings(rows: &[(&str, Duration)]) {
    let mut text = String::from("phase,seconds\n");
    for (phase, d) in rows {
        text.push_str(&format!("{phase},{:.6}\n", d.as_secs_f64()));
    }
    eprint!("{text}");
}

fn skeleton_timing_rows(t: &PhaseTimings) -> Vec<(&'static str, Duration)> {
    vec![
        ("build_sk_largest_supernode", t.build_sk_slowest_supernode),
        ("brandes_sk", t.brandes_sk),
        ("finish", t.finish),
        ("total", t.reported_total()),
        ("build_sk_all_supernodes", t.build_sk_total),
        ("wall", t.wall),
    ]
}

fn exact(args: TargetArgs) -> Result<()> {
    let opts = options(args.common.epsilon)?;
    let graph = read_graph(&args.common.graph)?;
    let targets = read_targets(&args.targets, &graph)?;
    let start = Instant::now();
    let c = with_threads(args.common.threads, || brandes(&graph, &targets, &opts))?;
    report_timings(&[("brandes", start.elapsed())]);
    emit_centrality(&args.common, &graph, c)
}

fn oracle(args: TargetArgs) -> Result<()> {
    let opts = options(args.common.epsilon)?;
    let graph = read_graph(&args.common.graph)?;
    let targets = read_targets(&args.targets, &graph)?;
    if targets.len() < 2 {
        return Err(bcpp::Error::TooFewTargets(targets.len()).into());
    }
    let start = Instant::now();
    let c = oracle_betweenness(&graph, &targets, &opts)?;
    report_timings(&[("oracle", start.elapsed())]);
    emit_centrality(&args.common, &graph, c)
}

fn skeleton(args: SkeletonArgs) -> Result<()> {
    let opts = options(args.common.epsilon)?;
    let graph = read_graph(&args.common.graph)?;
    let targets = read_targets(&args.targets, &graph)?;
    let partition = resolve_partition(&args.partition, &graph)?;
    let run = with_threads(args.common.threads, || brandes_pp_timed(&graph, &partition, &targets, &opts))?;
    if let Some(path) = &args.dump_skeleton {
        let refined = partition.refine_with_targets(&targets);
        let sk = with_threads(args.common.threads, || build_skeleton(&graph, &refined, &targets, &opts))?;
        fs::write(path, sk.dump(&graph)).with_context(|| format!("cannot write {}", path.display()))?;
    }
    report_timings(&skeleton_timing_rows(&run.timings));
    emit_centrality(&args.common, &graph, run.centrality)
}

fn all(args: AllArgs) -> Result<()> {
    let opts = options(args.common.epsilon)?;
    let graph = read_graph(&args.common.graph)?;
    let partition = resolve_partition(&args.partition, &graph)?;
    let run = with_threads(args.common.threads, || brandes_pp_all_timed(&graph, &partition, &opts))?;
    report_timings(&skeleton_timing_rows(&run.timings));
    emit_centrality(&args.common, &graph, run.centrality)
}

fn partition(args: PartitionArgs) -> Result<()> {
    let graph = read_graph(&args.graph)?;
    let p = bfs_balanced_partition(&graph, args.k, args.seed)?;
    write_text(args.out.as_ref(), &p.to_text(&graph))
}

/// Targets are drawn with `seed + 1` so they are independent of the graph's
/// random stream.
fn gen(args: GenArgs) -> Result<()> {
    let weights = WeightRange::new(args.min_weight, args.max_weight)?;
    let (graph, planted) = match args.family {
        Family::Planted { k, size, p_in, p_out } => {
            let (g, p) = generate::planted_partition(k, size, p_in, p_out, weights, args.seed)?;
            (g, Some(p))
        }
        Family::ErdosRenyi { n, p } => (generate::erdos_renyi(n, p, weights, args.seed)?, None),
        Family::Path { n } => (generate::path(n)?, None),
        Family::Cycle { n } => (generate::cycle(n)?, None),
        Family::Star { leaves } => (generate::star(leaves)?, None),
    };
    if let Some(path) = &args.emit_partition {
        let Some(p) = &planted else {
            return Err(usage("--emit-partition is only available for the planted family"));
        };
        fs::write(path, p.to_text(&graph)).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if let (Some(count), Some(path)) = (args.emit_targets, &args.targets_out) {
        let targets = generate::random_targets(graph.node_count(), count, args.seed.wrapping_add(1))?;
        let text: String = targets.members().iter().map(|&v| format!("{}\n", graph.label(v))).collect();
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    write_text(args.out.as_ref(), &graph.to_edge_list())
}

fn min_median(samples: &mut [Duration]) -> (Duration, Duration) {
    samples.sort();
    let n = samples.len();
    let median = if n % 2 == 1 { samples[n / 2] } else { (samples[n / 2 - 1] + samples[n / 2]) / 2 };
    (samples[0], median)
}

fn secs(d: Duration) -> String {
    format!("{:.6}", d.as_secs_f64())
}

fn bench(args: BenchArgs) -> Result<()> {
    if args.repetitions == 0 {
        return Err(usage("--repetitions must be at least 1"));
    }
    if args.partition.is_empty() && args.auto_partition.is_empty() {
        return Err(usage("bench needs at least one --partition or --auto-partition"));
    }
    let opts = options(args.epsilon)?;
    let graph = read_graph(&args.graph)?;
    let targets = read_targets(&args.targets, &graph)?;
    let mut partitions = Vec::new();
    for path in &args.partition {
        partitions.push((path.display().to_string(), read_partition(path, &graph)?));
    }
    for &k in &args.auto_partition {
        partitions.push((format!("auto:{k}"), bfs_balanced_partition(&graph, k, args.seed)?));
    }

    with_threads(args.threads, || -> Result<()> {
        let mut baseline_times = Vec::new();
        let mut baseline = None;
        for _ in 0..args.repetitions {
            let start = Instant::now();
            baseline = Some(brandes(&graph, &targets, &opts)?);
            baseline_times.push(start.elapsed());
        }
        let baseline = baseline.expect("at least one repetition");
        let (base_min, base_median) = min_median(&mut baseline_times);

        let mut report = String::from(
            "partition,k,skeleton_nodes,skeleton_edges,baseline_min,baseline_median,skeleton_min,skeleton_median,\
             build_sk_largest_supernode,brandes_sk,finish,reported_total,speedup,max_relative_difference\n",
        );
        for (name, partition) in &partitions {
            let mut walls = Vec::new();
            let mut best: Option<bcpp::SkeletonRun> = None;
            for _ in 0..args.repetitions {
                let start = Instant::now();
                let run = brandes_pp_timed(&graph, partition, &targets, &opts)?;
                let wall = start.elapsed();
                walls.push(wall);
                if best.as_ref().is_none_or(|b| wall < b.timings.wall) {
                    best = Some(run);
                }
            }
            let best = best.expect("at least one repetition");
            let (min, median) = min_median(&mut walls);
            let t = &best.timings;
            let speedup = base_min.as_secs_f64() / min.as_secs_f64().max(f64::MIN_POSITIVE);
            report.push_str(&format!(
                "{name},{},{},{},{},{},{},{},{},{},{},{},{:.3},{}\n",
                partition.k(),
                best.skeleton_nodes,
                best.skeleton_edges,
                secs(base_min),
                secs(base_median),
                secs(min),
                secs(median),
                secs(t.build_sk_slowest_supernode),
                secs(t.brandes_sk),
                secs(t.finish),
                secs(t.reported_total()),
                speedup,
                significant(best.centrality.max_relative_difference(&baseline)),
            ));
        }
        write_text(args.out.as_ref(), &report)
    })?;
    Ok(())
}

pub fn check_usage(err: &anyhow::Error) -> bool {
    err.downcast_ref::<UsageError>().is_some()
}
