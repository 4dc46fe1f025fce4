//! Proximity graphs that can stand in for the Delaunay graph: symmetrized
//! k-nearest-neighbor graphs, the minimum spanning tree and the relative
//! neighborhood graph. For the Euclidean metric the last two are extracted
//! from Delaunay edges, since both are Delaunay subgraphs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    adjacency, build_delaunay, chain_graph, dedupe_points, orient2d_sign, NeighborGraph, Point2,
};
use crate::potential::Metric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GraphKind {
    #[default]
    Delaunay,
    /// Union of the directed k-nearest-neighbor relations.
    Knn(usize),
    /// Intersection of the directed k-nearest-neighbor relations.
    MutualKnn(usize),
    Mst,
    Rng,
}

impl GraphKind {
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphKind::Knn(0) | GraphKind::MutualKnn(0) => {
                Err(Error::InvalidParameter("k must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Parses a kind name, taking `k` for the k-NN variants.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        let need_k =
            || k.ok_or_else(|| Error::InvalidParameter(format!("graph kind `{name}` requires k")));
        let kind = match name {
            "delaunay" | "dg" => GraphKind::Delaunay,
            "knn" => GraphKind::Knn(need_k()?),
            "mutual-knn" => GraphKind::MutualKnn(need_k()?),
            "mst" | "emst" => GraphKind::Mst,
            "rng" => GraphKind::Rng,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown graph kind `{other}`"
                )))
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Delaunay => write!(f, "delaunay"),
            GraphKind::Knn(k) => write!(f, "knn({k})"),
            GraphKind::MutualKnn(k) => write!(f, "mutual-knn({k})"),
            GraphKind::Mst => write!(f, "mst"),
            GraphKind::Rng => write!(f, "rng"),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    /// Accepts `delaunay`, `mst`, `rng`, `knn:K` and `mutual-knn:K`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, k)) => {
                let k = k
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad k in `{s}`")))?;
                GraphKind::parse(name, Some(k))
            }
            None => GraphKind::parse(s, None),
        }
    }
}

fn ensure_distinct(points: &[Point2]) -> Result<()> {
    let d = dedupe_points(points)?;
    if d.has_duplicates() {
        let dup = d
            .remap
            .iter()
            .enumerate()
            .find(|&(i, &u)| d.representative[u] != i)
            .map(|(i, _)| i)
            .unwrap_or_default();
        return Err(Error::InvalidParameter(format!(
            "point {dup} duplicates an earlier point; deduplicate before building a graph"
        )));
    }
    Ok(())
}

/// True when a triangulation does not exist: fewer than three points or
/// all of them on one line.
pub fn is_degenerate(points: &[Point2]) -> bool {
    points.len() < 3
        || (2..points.len()).all(|k| orient2d_sign(points[0], points[1], points[k]) == 0)
}

/// Delaunay adjacency of distinct points.
pub fn delaunay_graph(points: &[Point2]) -> Result<NeighborGraph> {
    ensure_distinct(points)?;
    Ok(adjacency(&build_delaunay(points)?))
}

/// Delaunay adjacency, or the chain graph along the dominant axis when the
/// points cannot be triangulated.
pub fn delaunay_or_chain(points: &[Point2]) -> Result<NeighborGraph> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    ensure_distinct(points)?;
    if is_degenerate(points) {
        Ok(chain_graph(points))
    } else {
        Ok(adjacency(&build_delaunay(points)?))
    }
}

fn by_key_then_id(a: &(f64, usize), b: &(f64, usize)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))
}

/// Directed k-nearest-neighbor lists; ties on the k-th distance go to the
/// smaller index.
fn knn_lists(points: &[Point2], k: usize, metric: Metric) -> Result<Vec<Vec<usize>>> {
    let n = points.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k < n (k = {k}, n = {n})"
        )));
    }
    Ok((0..n)
        .into_par_iter()
        .map(|i| {
            let mut cand: Vec<(f64, usize)> = (0..n)
                .filter(|&j| j != i)
                .map(|j| (metric.compare_key(points[i], points[j]), j))
                .collect();
            cand.select_nth_unstable_by(k - 1, by_key_then_id);
            cand.truncate(k);
            cand.sort_by(by_key_then_id);
            cand.into_iter().map(|(_, j)| j).collect()
        })
        .collect())
}

/// Union-symmetrized k-NN graph.
pub fn knn_graph(points: &[Point2], k: usize, metric: Metric) -> Result<NeighborGraph> {
    let lists = knn_lists(points, k, metric)?;
    Ok(NeighborGraph::from_edges(
        points.len(),
        lists
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |&j| (i, j))),
    ))
}

/// Mutual (intersection-symmetrized) k-NN graph.
pub fn mutual_knn_graph(points: &[Point2], k: usize, metric: Metric) -> Result<NeighborGraph> {
    let lists = knn_lists(points, k, metric)?;
    let edges = lists
        .iter()
        .enumerate()
        .flat_map(|(i, l)| l.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && lists[j].contains(&i))
        .collect::<Vec<_>>();
    Ok(NeighborGraph::from_edges(points.len(), edges))
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Minimum spanning tree of the complete metric graph. Equal weights are
/// ordered by edge `(i, j)`, which makes the tree unique.
pub fn emst_graph(points: &[Point2], metric: Metric) -> Result<NeighborGraph> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if metric.is_euclidean() {
        let candidates = delaunay_or_chain(points)?;
        let mut edges: Vec<(f64, usize, usize)> = candidates
            .edges()
            .into_iter()
            .map(|(i, j)| (metric.compare_key(points[i], points[j]), i, j))
            .collect();
        edges.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        let mut sets = DisjointSet::new(n);
        let tree = edges
            .into_iter()
            .filter(|&(_, i, j)| sets.union(i, j))
            .map(|(_, i, j)| (i, j));
        Ok(NeighborGraph::from_edges(n, tree))
    } else {
        Ok(prim_mst(points, metric))
    }
}

/// Dense Prim over all pairs, comparing edges by `(weight, min id, max id)`.
fn prim_mst(points: &[Point2], metric: Metric) -> NeighborGraph {
    let n = points.len();
    let key = |i: usize, j: usize| (metric.compare_key(points[i], points[j]), i.min(j), i.max(j));
    let less = |a: &(f64, usize, usize), b: &(f64, usize, usize)| {
        a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))) == Ordering::Less
    };
    let mut in_tree = vec![false; n];
    let mut best: Vec<Option<(f64, usize, usize)>> = vec![None; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..n {
        for v in 0..n {
            if !in_tree[v] {
                let cand = key(current, v);
                if best[v].is_none_or(|b| less(&cand, &b)) {
                    best[v] = Some(cand);
                }
            }
        }
        let next = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| {
                let (ka, kb) = (best[a].unwrap(), best[b].unwrap());
                if less(&ka, &kb) {
                    Ordering::Less
                } else if less(&kb, &ka) {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            })
            .expect("vertices remain");
        let (_, i, j) = best[next].unwrap();
        edges.push((i, j));
        in_tree[next] = true;
        current = next;
    }
    NeighborGraph::from_edges(n, edges)
}

/// Relative neighborhood graph: `(i, j)` is kept unless some `w` is strictly
/// closer to both endpoints than they are to each other.
pub fn rng_graph(points: &[Point2], metric: Metric) -> Result<NeighborGraph> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let candidates = if metric.is_euclidean() {
        delaunay_or_chain(points)?.edges()
    } else {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect()
    };
    let key = |a: usize, b: usize| metric.compare_key(points[a], points[b]);
    let kept: Vec<(usize, usize)> = candidates
        .into_par_iter()
        .filter(|&(i, j)| {
            let dij = key(i, j);
            !(0..n).any(|w| w != i && w != j && key(i, w).max(key(j, w)) < dij)
        })
        .collect();
    Ok(NeighborGraph::from_edges(n, kept))
}

pub fn build_graph(kind: GraphKind, points: &[Point2], metric: Metric) -> Result<NeighborGraph> {
    kind.validate()?;
    match kind {
        GraphKind::Delaunay => delaunay_graph(points),
        GraphKind::Knn(k) => knn_graph(points, k, metric),
        GraphKind::MutualKnn(k) => mutual_knn_graph(points, k, metric),
        GraphKind::Mst => emst_graph(points, metric),
        GraphKind::Rng => rng_graph(points, metric),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().copied().map(Point2::from).collect()
    }

    fn line() -> Vec<Point2> {
        pts(&[(0., 0.), (1., 0.), (3., 0.)])
    }

    #[test]
    fn knn_examples() {
        let tri = pts(&[(0., 0.), (1., 0.), (0., 1.)]);
        assert_eq!(
            knn_graph(&tri, 2, Metric::Euclidean).unwrap().num_edges(),
            3
        );
        let g = knn_graph(&line(), 1, Metric::Euclidean).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let mutual = mutual_knn_graph(&line(), 1, Metric::Euclidean).unwrap();
        assert_eq!(mutual.edges(), vec![(0, 1)]);
    }

    #[test]
    fn knn_rejects_bad_k() {
        for k in [0, 3, 7] {
            let r = knn_graph(&line(), k, Metric::Euclidean);
            assert!(matches!(r, Err(Error::InvalidParameter(_))), "k={k}");
        }
    }

    #[test]
    fn knn_tie_prefers_smaller_index() {
        let g = knn_graph(&pts(&[(0., 0.), (-1., 0.), (1., 0.)]), 1, Metric::Euclidean).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        let g = knn_graph(&pts(&[(0., 0.), (1., 0.), (-1., 0.)]), 1, Metric::Euclidean).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn emst_examples() {
        let two = pts(&[(0., 0.), (1., 1.)]);
        assert_eq!(
            emst_graph(&two, Metric::Euclidean).unwrap().edges(),
            vec![(0, 1)]
        );
        let g = emst_graph(&line(), Metric::Euclidean).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let g = emst_graph(&line(), Metric::Manhattan).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            emst_graph(&pts(&[(2., 2.)]), Metric::Euclidean)
                .unwrap()
                .num_edges(),
            0
        );
    }

    #[test]
    fn rng_examples() {
        let two = pts(&[(0., 0.), (1., 1.)]);
        assert_eq!(rng_graph(&two, Metric::Euclidean).unwrap().num_edges(), 1);
        // Witnesses on the lune boundary do not remove an edge.
        let tie = pts(&[(0., 0.), (5., 0.), (3., 4.)]);
        let g = rng_graph(&tie, Metric::Euclidean).unwrap();
        assert_eq!(g.num_edges(), 3);
        let iso = pts(&[(0., 0.), (4., 0.), (2., 1.)]);
        assert_eq!(
            rng_graph(&iso, Metric::Euclidean).unwrap().edges(),
            vec![(0, 2), (1, 2)]
        );
    }

    #[test]
    fn dispatch() {
        let tri = pts(&[(0., 0.), (1., 0.), (0., 1.)]);
        assert_eq!(
            build_graph(GraphKind::Delaunay, &tri, Metric::Euclidean)
                .unwrap()
                .num_edges(),
            3
        );
        let two = pts(&[(0., 0.), (1., 1.)]);
        assert_eq!(
            build_graph(GraphKind::Mst, &two, Metric::Euclidean)
                .unwrap()
                .num_edges(),
            1
        );
        let knn = build_graph(GraphKind::Knn(1), &line(), Metric::Euclidean).unwrap();
        let mst = build_graph(GraphKind::Mst, &line(), Metric::Euclidean).unwrap();
        assert_eq!(knn, mst);
        assert!(build_graph(GraphKind::Knn(0), &line(), Metric::Euclidean).is_err());
        assert!(matches!(
            build_graph(GraphKind::Delaunay, &line(), Metric::Euclidean),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("knn:4".parse::<GraphKind>().unwrap(), GraphKind::Knn(4));
        assert_eq!("rng".parse::<GraphKind>().unwrap(), GraphKind::Rng);
        assert!("knn:0".parse::<GraphKind>().is_err());
        assert!("knn".parse::<GraphKind>().is_err());
        assert!("gabriel".parse::<GraphKind>().is_err());
    }

    #[test]
    fn duplicates_are_rejected() {
        let dup = pts(&[(0., 0.), (1., 0.), (0., 0.), (0., 1.)]);
        assert!(matches!(
            delaunay_graph(&dup),
            Err(Error::InvalidParameter(_))
        ));
    }
}
