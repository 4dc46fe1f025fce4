//! Command-line front end.
//!
//! Exit codes: `0` success, `1` usage or invalid parameter, `2` data error
//! (unreadable or malformed input, degenerate geometry, I/O failure). All
//! output files are written atomically.

pub mod render;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::eval::{
    generate_mixture, load_points_csv, log_spaced, pipeline_graph, points_csv, read_result_csv,
    result_csv, run_pipeline, sweep_csv, sweep_sigma, with_threads, MixtureSpec, PipelineConfig,
};
use crate::geometry::{dedupe_points, parse_edge_list};
use crate::potential::Metric;
use crate::proxgraphs::GraphKind;
use render::{render_svg, ColorBy, EdgeStyle, RenderOptions};

#[derive(Debug, Parser)]
#[command(
    name = "dgcluster",
    version,
    about = "Delaunay in-tree clustering of 2D points"
)]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "DGCLUSTER_THREADS", default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cluster a point file and write the result table.
    Cluster(ClusterArgs),
    /// Cluster once per sigma and tabulate cluster counts (and scores).
    Sweep(SweepArgs),
    /// Export a proximity graph.
    Graph(GraphArgs),
    /// Generate a Gaussian-mixture dataset.
    Gen(GenArgs),
    /// Draw a result table (and optionally a graph) as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Euclidean,
    SquaredEuclidean,
    Manhattan,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Euclidean => Metric::Euclidean,
            MetricArg::SquaredEuclidean => Metric::SquaredEuclidean,
            MetricArg::Manhattan => Metric::Manhattan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Delaunay,
    Knn,
    MutualKnn,
    Mst,
    Rng,
}

#[derive(Debug, Args)]
pub struct GraphOpts {
    /// Neighborhood graph.
    #[arg(long = "graph", value_enum, default_value = "delaunay")]
    pub kind: KindArg,
    /// Neighbor count for the k-NN graphs.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "euclidean")]
    pub metric: MetricArg,
}

impl GraphOpts {
    fn graph_kind(&self) -> Result<GraphKind> {
        let name = match self.kind {
            KindArg::Delaunay => "delaunay",
            KindArg::Knn => "knn",
            KindArg::MutualKnn => "mutual-knn",
            KindArg::Mst => "mst",
            KindArg::Rng => "rng",
        };
        GraphKind::parse(name, self.k)
    }
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long = "out")]
    pub output: PathBuf,
    /// Gaussian bandwidth of the potential.
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: f64,
    #[command(flatten)]
    pub graph: GraphOpts,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long = "out")]
    pub output: PathBuf,
    /// Comma-separated sigma values, e.g. `0.05,5,30000`.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "sigma_range",
        required_unless_present = "sigma_range"
    )]
    pub sigmas: Vec<f64>,
    /// Log-spaced range `LO:HI:Nlog`, e.g. `0.01:1e6:7log`.
    #[arg(long)]
    pub sigma_range: Option<String>,
    /// Score each run against the label column of the input.
    #[arg(long)]
    pub truth: bool,
    #[command(flatten)]
    pub graph: GraphOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// `i j` per line.
    Edges,
    /// `{"points": [...], "edges": [...]}`
    Json,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long = "out")]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value = "delaunay")]
    pub kind: KindArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "euclidean")]
    pub metric: MetricArg,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Preset: two-gaussian, three-gaussian, unbalanced, touching.
    #[arg(long, default_value = "two-gaussian")]
    pub spec: String,
    #[arg(long, default_value_t = crate::eval::TWO_GAUSSIAN_SEED)]
    pub seed: u64,
    #[arg(long = "out")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Result table written by `cluster`.
    #[arg(long)]
    pub result: PathBuf,
    /// Edge list written by `graph`, drawn underneath.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    #[arg(long = "out")]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value = "cluster")]
    pub color_by: ColorBy,
    #[arg(long, default_value_t = 4.0)]
    pub radius: f64,
    #[arg(long, value_enum, default_value = "thin")]
    pub edge_style: EdgeStyle,
    /// Leave out the in-tree arrows.
    #[arg(long)]
    pub no_forest: bool,
    #[arg(long, default_value_t = 800.0)]
    pub size: f64,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<()> {
    let threads = cli.threads;
    match &cli.command {
        Command::Cluster(a) => with_threads(threads, || cmd_cluster(a))?,
        Command::Sweep(a) => with_threads(threads, || cmd_sweep(a))?,
        Command::Graph(a) => with_threads(threads, || cmd_graph(a))?,
        Command::Gen(a) => cmd_gen(a),
        Command::Render(a) => cmd_render(a),
    }
}

fn positive_sigma(sigma: f64) -> Result<f64> {
    if sigma > 0.0 && sigma.is_finite() {
        Ok(sigma)
    } else {
        Err(Error::InvalidParameter(format!(
            "sigma must be positive, got {sigma}"
        )))
    }
}

pub fn cmd_cluster(a: &ClusterArgs) -> Result<()> {
    let sigma = positive_sigma(a.sigma)?;
    let kind = a.graph.graph_kind()?;
    let table = load_points_csv(&a.input)?;
    let config = PipelineConfig::new(sigma)
        .with_graph(kind)
        .with_metric(a.graph.metric.into());
    let result = run_pipeline(&table.points, &config)?;
    crate::eval::write_atomic(&a.output, result_csv(&result).as_bytes())?;
    if result.used_chain_fallback {
        eprintln!("note: points are collinear or too few; used the chain graph");
    }
    println!("clusters={}", result.num_clusters());
    Ok(())
}

/// Expands `LO:HI:Nlog` (the `log` suffix is optional).
pub fn parse_sigma_range(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidParameter(format!("bad sigma range `{spec}`, expected LO:HI:Nlog"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        return Err(bad());
    };
    let count = count.strip_suffix("log").unwrap_or(count);
    let lo: f64 = lo.parse().map_err(|_| bad())?;
    let hi: f64 = hi.parse().map_err(|_| bad())?;
    let count: usize = count.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    log_spaced(lo, hi, count)
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<()> {
    let sigmas = match &a.sigma_range {
        Some(r) => parse_sigma_range(r)?,
        None => a.sigmas.clone(),
    };
    for &s in &sigmas {
        positive_sigma(s)?;
    }
    let kind = a.graph.graph_kind()?;
    let table = load_points_csv(&a.input)?;
    let truth: Option<Vec<usize>> = if a.truth {
        let labels = table.labels.as_ref().ok_or_else(|| Error::Parse {
            path: a.input.clone(),
            line: 1,
            message: "--truth needs a label column".into(),
        })?;
        // Densify so any integer labels work.
        let mut ids = std::collections::HashMap::new();
        Some(
            labels
                .iter()
                .map(|l| {
                    let next = ids.len();
                    *ids.entry(*l).or_insert(next)
                })
                .collect(),
        )
    } else {
        None
    };
    let rows = sweep_sigma(
        &table.points,
        &sigmas,
        kind,
        a.graph.metric.into(),
        truth.as_deref(),
    )?;
    crate::eval::write_atomic(&a.output, sweep_csv(&rows).as_bytes())?;
    for r in &rows {
        println!("sigma={} clusters={}", r.sigma, r.cluster_count);
    }
    Ok(())
}

pub fn cmd_graph(a: &GraphArgs) -> Result<()> {
    let opts = GraphOpts {
        kind: a.kind,
        k: a.k,
        metric: a.metric,
    };
    let kind = opts.graph_kind()?;
    let table = load_points_csv(&a.input)?;
    let dedup = dedupe_points(&table.points)?;
    let (graph, fallback) = pipeline_graph(&dedup.unique_points, kind, a.metric.into())?;
    if fallback {
        eprintln!("note: points are collinear or too few; used the chain graph");
    }
    let graph = graph.relabel(&dedup.representative, table.points.len());
    let text = match a.format {
        GraphFormat::Edges => graph.to_edge_list(),
        GraphFormat::Json => graph.to_json(&table.points) + "\n",
    };
    crate::eval::write_atomic(&a.output, text.as_bytes())?;
    println!("edges={}", graph.num_edges());
    Ok(())
}

pub fn cmd_gen(a: &GenArgs) -> Result<()> {
    let spec = MixtureSpec::preset(&a.spec, a.seed)?;
    let (points, labels) = generate_mixture(&spec)?;
    crate::eval::write_atomic(&a.output, points_csv(&points, Some(&labels)).as_bytes())?;
    println!("points={}", points.len());
    Ok(())
}

pub fn cmd_render(a: &RenderArgs) -> Result<()> {
    if !(a.radius > 0.0 && a.radius.is_finite()) || !(a.size > 0.0 && a.size.is_finite()) {
        return Err(Error::InvalidParameter(
            "radius and size must be positive".into(),
        ));
    }
    let rows = read_result_csv(&a.result)?;
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = rows.len();
    for r in &rows {
        if r.parent.is_some_and(|p| p >= n) {
            return Err(Error::Parse {
                path: a.result.clone(),
                line: r.index + 2,
                message: "parent out of range".into(),
            });
        }
    }
    let edges = match &a.edges {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            let edges = parse_edge_list(&text).map_err(|(line, message)| Error::Parse {
                path: path.clone(),
                line,
                message,
            })?;
            if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= n || j >= n) {
                return Err(Error::Parse {
                    path: path.clone(),
                    line: 0,
                    message: format!("edge ({i}, {j}) refers to a missing point"),
                });
            }
            Some(edges)
        }
        None => None,
    };
    let opts = RenderOptions {
        size: a.size,
        radius: a.radius,
        color_by: a.color_by,
        edge_style: a.edge_style,
        draw_forest: !a.no_forest,
        ..RenderOptions::default()
    };
    let svg = render_svg(&rows, edges.as_deref(), &opts);
    crate::eval::write_atomic(&a.output, svg.as_bytes())?;
    Ok(())
}
