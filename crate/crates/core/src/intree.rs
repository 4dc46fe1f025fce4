//! In-tree forests: every point points at its nearest graph neighbor of
//! lower potential; points without such a neighbor are roots, and each root
//! with everything that drains into it forms one cluster.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{NeighborGraph, Point2};
use crate::potential::{Metric, PotentialField};

/// Parent links of an in-tree forest. `None` marks a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InTreeForest {
    parent: Vec<Option<usize>>,
}

impl InTreeForest {
    /// Wraps a raw parent array without checking it; see [`validate_forest`].
    pub fn from_parents(parent: Vec<Option<usize>>) -> Self {
        Self { parent }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.is_none().then_some(i))
    }

    pub fn num_edges(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }
}

/// Cluster membership derived from a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterLabeling {
    root_of: Vec<usize>,
    labels: Vec<usize>,
    num_clusters: usize,
}

impl ClusterLabeling {
    pub fn root_of(&self) -> &[usize] {
        &self.root_of
    }

    /// Dense labels in `0..num_clusters`; label 0 belongs to the smallest
    /// root id.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_clusters(&self) -> usize {
        self.num_clusters
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_clusters];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }
}

fn check_sizes(graph: &NeighborGraph, field: &PotentialField, points: &[Point2]) -> Result<()> {
    if graph.len() != field.len() {
        return Err(Error::LengthMismatch {
            left: graph.len(),
            right: field.len(),
        });
    }
    if graph.len() != points.len() {
        return Err(Error::LengthMismatch {
            left: graph.len(),
            right: points.len(),
        });
    }
    Ok(())
}

/// Graph neighbors of `i` that precede it in the potential order.
pub fn lower_neighbor_set(i: usize, graph: &NeighborGraph, field: &PotentialField) -> Vec<usize> {
    graph
        .neighbors(i)
        .iter()
        .copied()
        .filter(|&k| field.strictly_lower(k, i))
        .collect()
}

/// Nearest lower neighbor of `i`; distance ties go to the smaller id.
pub fn directed_neighbor(
    i: usize,
    graph: &NeighborGraph,
    field: &PotentialField,
    points: &[Point2],
    metric: Metric,
) -> Option<usize> {
    let mut best: Option<(f64, usize)> = None;
    // Neighbor lists are sorted, so a strict `<` keeps the smallest id on ties.
    for &k in graph.neighbors(i) {
        if !field.strictly_lower(k, i) {
            continue;
        }
        let d = metric.compare_key(points[i], points[k]);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, k));
        }
    }
    best.map(|(_, k)| k)
}

pub fn build_forest(
    graph: &NeighborGraph,
    field: &PotentialField,
    points: &[Point2],
    metric: Metric,
) -> Result<InTreeForest> {
    check_sizes(graph, field, points)?;
    let parent = (0..graph.len())
        .into_par_iter()
        .map(|i| directed_neighbor(i, graph, field, points, metric))
        .collect();
    Ok(InTreeForest { parent })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Visit {
    New,
    OnPath,
    Done(usize),
}

/// Follows each parent chain to its root, memoizing finished vertices so
/// that every vertex is walked once.
pub fn resolve_roots(forest: &InTreeForest) -> Result<ClusterLabeling> {
    let n = forest.len();
    let mut state = vec![Visit::New; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut v = start;
        let root = loop {
            match state[v] {
                Visit::Done(r) => break r,
                Visit::OnPath => return Err(Error::CycleDetected { vertex: v }),
                Visit::New => {}
            }
            state[v] = Visit::OnPath;
            path.push(v);
            match forest.parent[v] {
                None => break v,
                Some(p) if p < n => v = p,
                Some(p) => {
                    return Err(Error::InvalidParameter(format!(
                        "parent {p} of vertex {v} is out of range"
                    )))
                }
            }
        };
        for u in path.drain(..) {
            state[u] = Visit::Done(root);
        }
    }

    let root_of: Vec<usize> = state
        .into_iter()
        .map(|s| match s {
            Visit::Done(r) => r,
            _ => unreachable!("every vertex is resolved"),
        })
        .collect();
    let mut label_of_root = vec![usize::MAX; n];
    let mut num_clusters = 0;
    for r in forest.roots() {
        label_of_root[r] = num_clusters;
        num_clusters += 1;
    }
    let labels = root_of.iter().map(|&r| label_of_root[r]).collect();
    Ok(ClusterLabeling {
        root_of,
        labels,
        num_clusters,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch {
        forest: usize,
        field: usize,
        graph: usize,
    },
    ParentOutOfRange {
        vertex: usize,
        parent: usize,
    },
    SelfParent {
        vertex: usize,
    },
    Cycle {
        vertex: usize,
    },
    /// The parent does not precede the vertex in the potential order.
    NotDescending {
        vertex: usize,
        parent: usize,
    },
    NotGraphNeighbor {
        vertex: usize,
        parent: usize,
    },
    EdgeCount {
        edges: usize,
        vertices: usize,
        trees: usize,
    },
    /// A root has a graph neighbor of lower potential.
    RootNotLocalMinimum {
        root: usize,
        lower: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch {
                forest,
                field,
                graph,
            } => {
                write!(
                    f,
                    "size mismatch: forest {forest}, field {field}, graph {graph}"
                )
            }
            Violation::ParentOutOfRange { vertex, parent } => {
                write!(f, "vertex {vertex}: parent {parent} out of range")
            }
            Violation::SelfParent { vertex } => write!(f, "vertex {vertex} is its own parent"),
            Violation::Cycle { vertex } => write!(f, "vertex {vertex} lies on a cycle"),
            Violation::NotDescending { vertex, parent } => {
                write!(f, "vertex {vertex}: parent {parent} is not lower")
            }
            Violation::NotGraphNeighbor { vertex, parent } => {
                write!(
                    f,
                    "vertex {vertex}: parent {parent} is not a graph neighbor"
                )
            }
            Violation::EdgeCount {
                edges,
                vertices,
                trees,
            } => {
                write!(f, "{edges} edges but {vertices} vertices in {trees} trees")
            }
            Violation::RootNotLocalMinimum { root, lower } => {
                write!(f, "root {root} has lower neighbor {lower}")
            }
        }
    }
}

/// Findings of [`validate_forest`]; empty when the forest is a proper
/// descent forest of the field over the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForestReport {
    pub violations: Vec<Violation>,
}

impl ForestReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks acyclicity, strict descent along every edge, the edge-count
/// identity `edges = n - trees`, and that every root is a local minimum of
/// the potential order over its graph neighbors.
pub fn validate_forest(
    forest: &InTreeForest,
    field: &PotentialField,
    graph: &NeighborGraph,
) -> ForestReport {
    let n = forest.len();
    let mut violations = Vec::new();
    if field.len() != n || graph.len() != n {
        violations.push(Violation::SizeMismatch {
            forest: n,
            field: field.len(),
            graph: graph.len(),
        });
        return ForestReport { violations };
    }

    let mut edges = 0;
    for (v, p) in forest.parent.iter().enumerate() {
        match *p {
            None => {
                if let Some(&lower) = graph
                    .neighbors(v)
                    .iter()
                    .find(|&&k| field.strictly_lower(k, v))
                {
                    violations.push(Violation::RootNotLocalMinimum { root: v, lower });
                }
            }
            Some(p) if p >= n => violations.push(Violation::ParentOutOfRange {
                vertex: v,
                parent: p,
            }),
            Some(p) if p == v => {
                edges += 1;
                violations.push(Violation::SelfParent { vertex: v });
            }
            Some(p) => {
                edges += 1;
                if !field.strictly_lower(p, v) {
                    violations.push(Violation::NotDescending {
                        vertex: v,
                        parent: p,
                    });
                }
                if !graph.has_edge(v, p) {
                    violations.push(Violation::NotGraphNeighbor {
                        vertex: v,
                        parent: p,
                    });
                }
            }
        }
    }

    // Walk every chain once; a chain that revisits a vertex of its own walk
    // is a cycle. Trees are counted by distinct terminal roots.
    let mut state = vec![Visit::New; n];
    let mut path = Vec::new();
    let mut trees = 0;
    for start in 0..n {
        let mut v = start;
        let outcome = loop {
            match state[v] {
                Visit::Done(r) => break Some(r),
                Visit::OnPath => break None,
                Visit::New => {}
            }
            state[v] = Visit::OnPath;
            path.push(v);
            match forest.parent[v] {
                Some(p) if p < n => v = p,
                _ => {
                    trees += 1;
                    break Some(v);
                }
            }
        };
        let mark = match outcome {
            Some(r) => Visit::Done(r),
            None => {
                violations.push(Violation::Cycle { vertex: v });
                Visit::Done(usize::MAX)
            }
        };
        for u in path.drain(..) {
            state[u] = mark;
        }
    }
    if edges + trees != n {
        violations.push(Violation::EdgeCount {
            edges,
            vertices: n,
            trees,
        });
    }
    ForestReport { violations }
}
