use std::fmt::Write as _;

use super::delaunay::Triangulation;
use super::point::Point2;

/// Undirected simple graph over vertex ids `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NeighborGraph {
    adjacency: Vec<Vec<usize>>,
}

impl NeighborGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from undirected edges; duplicates and self-loops are
    /// dropped.
    ///
    /// # Panics
    /// If an endpoint is out of range.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (i, j) in edges {
            assert!(
                i < n && j < n,
                "edge ({i}, {j}) out of range for {n} vertices"
            );
            if i != j {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self { adjacency }
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
            .collect()
    }

    pub fn is_subgraph_of(&self, other: &NeighborGraph) -> bool {
        self.len() == other.len() && self.edges().iter().all(|&(i, j)| other.has_edge(i, j))
    }

    /// Relabels vertices through `map` (vertex `v` becomes `map[v]`) into a
    /// graph on `n` vertices.
    pub fn relabel(&self, map: &[usize], n: usize) -> NeighborGraph {
        NeighborGraph::from_edges(n, self.edges().into_iter().map(|(i, j)| (map[i], map[j])))
    }

    /// One `i j` line per edge, `i < j`, lexicographically sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.edges() {
            writeln!(out, "{i} {j}").unwrap();
        }
        out
    }

    /// `{"points": [[x, y], ...], "edges": [[i, j], ...]}`
    pub fn to_json(&self, points: &[Point2]) -> String {
        let value = serde_json::json!({
            "points": points.iter().map(|p| [p.x, p.y]).collect::<Vec<_>>(),
            "edges": self.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        });
        value.to_string()
    }
}

/// Parses the `i j` edge-list format produced by
/// [`NeighborGraph::to_edge_list`]. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>, (usize, String)> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => edges.push((i, j)),
            _ => return Err((lineno + 1, format!("expected `i j`, got {line:?}"))),
        }
    }
    Ok(edges)
}

/// Delaunay neighbor sets: `i` and `j` are adjacent iff they share a
/// triangle edge.
pub fn adjacency(tri: &Triangulation) -> NeighborGraph {
    NeighborGraph::from_edges(tri.num_vertices(), tri.edges())
}

/// Path through the points sorted along the axis of larger extent. This is
/// the Delaunay graph substitute for fewer than three or collinear points,
/// where it coincides with the Euclidean minimum spanning tree.
pub fn chain_graph(points: &[Point2]) -> NeighborGraph {
    let n = points.len();
    if n < 2 {
        return NeighborGraph::empty(n);
    }
    let span = |f: fn(&Point2) -> f64| {
        let (lo, hi) = points
            .iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        hi - lo
    };
    let by_x = span(|p| p.x) >= span(|p| p.y);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (points[i], points[j]);
        let (ka, kb) = if by_x {
            ((a.x, a.y), (b.x, b.y))
        } else {
            ((a.y, a.x), (b.y, b.x))
        };
        ka.partial_cmp(&kb).unwrap().then(i.cmp(&j))
    });
    NeighborGraph::from_edges(n, order.windows(2).map(|w| (w[0], w[1])))
}
