use crate::error::{Error, Result};
use crate::geometry::{dedupe_points, DedupMap, NeighborGraph, Point2};
use crate::intree::{build_forest, resolve_roots, ClusterLabeling, InTreeForest};
use crate::potential::{compute_potentials_with, Metric, PotentialField, SelfTerm};
use crate::proxgraphs::{build_graph, delaunay_or_chain, is_degenerate, GraphKind};

/// Settings for one clustering run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineConfig {
    pub sigma: f64,
    pub graph_kind: GraphKind,
    pub metric: Metric,
    pub self_term: SelfTerm,
}

impl PipelineConfig {
    pub fn new(sigma: f64) -> Self {
        Self {
            sigma,
            graph_kind: GraphKind::Delaunay,
            metric: Metric::Euclidean,
            self_term: SelfTerm::Include,
        }
    }

    pub fn with_graph(mut self, kind: GraphKind) -> Self {
        self.graph_kind = kind;
        self
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    pub fn with_self_term(mut self, self_term: SelfTerm) -> Self {
        self.self_term = self_term;
        self
    }
}

/// Output of [`cluster_pipeline`]. The field, forest and labeling are indexed
/// by the original input points; the graph is over the deduplicated points.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterResult {
    pub points: Vec<Point2>,
    pub dedup: DedupMap,
    pub graph: NeighborGraph,
    /// The chain graph replaced a Delaunay graph that does not exist.
    pub used_chain_fallback: bool,
    pub field: PotentialField,
    pub forest: InTreeForest,
    pub labeling: ClusterLabeling,
    pub graph_kind: GraphKind,
    pub metric: Metric,
    pub sigma: f64,
}

impl ClusterResult {
    pub fn num_clusters(&self) -> usize {
        self.labeling.num_clusters()
    }

    pub fn labels(&self) -> &[usize] {
        self.labeling.labels()
    }

    /// Graph edges in original indices (each unique point is represented by
    /// its first occurrence).
    pub fn graph_in_original_ids(&self) -> NeighborGraph {
        self.graph
            .relabel(&self.dedup.representative, self.points.len())
    }
}

/// Deduplicate, build the graph, compute potentials, link each point to its
/// nearest lower neighbor and resolve roots.
pub fn cluster_pipeline(
    points: &[Point2],
    sigma: f64,
    graph_kind: GraphKind,
    metric: Metric,
) -> Result<ClusterResult> {
    run_pipeline(
        points,
        &PipelineConfig::new(sigma)
            .with_graph(graph_kind)
            .with_metric(metric),
    )
}

pub fn run_pipeline(points: &[Point2], config: &PipelineConfig) -> Result<ClusterResult> {
    let dedup = dedupe_points(points)?;
    let unique = &dedup.unique_points;

    let (graph, used_chain_fallback) = pipeline_graph(unique, config.graph_kind, config.metric)?;

    // Overlapping points all count towards the potential.
    let multiplicity = dedup.multiplicities();
    let unique_field = compute_potentials_with(
        unique,
        Some(&multiplicity),
        config.sigma,
        config.metric,
        config.self_term,
    )?;
    let unique_forest = build_forest(&graph, &unique_field, unique, config.metric)?;

    // Broadcast back: representatives keep their link, duplicates hang
    // under their representative (equal potential, smaller index).
    let rep = &dedup.representative;
    let parents = (0..points.len())
        .map(|i| {
            let u = dedup.remap[i];
            if rep[u] == i {
                unique_forest.parent(u).map(|p| rep[p])
            } else {
                Some(rep[u])
            }
        })
        .collect();
    let forest = InTreeForest::from_parents(parents);
    let field = unique_field.gather(&dedup.remap);
    let labeling = resolve_roots(&forest)?;

    Ok(ClusterResult {
        points: points.to_vec(),
        dedup,
        graph,
        used_chain_fallback,
        field,
        forest,
        labeling,
        graph_kind: config.graph_kind,
        metric: config.metric,
        sigma: config.sigma,
    })
}

/// Graph over distinct points as the pipeline builds it. The Delaunay kind
/// falls back to the chain graph when no triangulation exists; the flag
/// reports whether that happened.
pub fn pipeline_graph(
    unique: &[Point2],
    kind: GraphKind,
    metric: Metric,
) -> Result<(NeighborGraph, bool)> {
    match kind {
        GraphKind::Delaunay => Ok((delaunay_or_chain(unique)?, is_degenerate(unique))),
        _ if unique.len() == 1 => Ok((NeighborGraph::empty(1), false)),
        kind => Ok((build_graph(kind, unique, metric)?, false)),
    }
}

/// Runs `f` on a dedicated pool of `threads` workers (0 means the rayon
/// default). Results are identical for every worker count.
pub fn with_threads<R, F>(threads: usize, f: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}
