//! Incremental Bowyer-Watson Delaunay triangulation.
//!
//! The convex hull is closed off by "ghost" triangles that share a single
//! vertex at infinity, so every insertion (inside or outside the current hull)
//! is the same cavity-retriangulation step. Cocircular ties go through
//! [`incircle_perturbed`], making the result unique for a given input order.

use std::collections::HashMap;

use super::point::{check_finite, Point2};
use super::predicates::{incircle_perturbed, orient2d_sign};
use crate::error::{Error, Result};

const GHOST: usize = usize::MAX;

/// A Delaunay triangulation of a set of distinct points.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    points: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
    neighbors: Vec<[Option<usize>; 3]>,
}

impl Triangulation {
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Vertex triples in counter-clockwise order.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// `neighbors()[t][k]` is the triangle across the edge opposite vertex
    /// `k` of triangle `t`, or `None` on the convex hull.
    pub fn neighbors(&self) -> &[[Option<usize>; 3]] {
        &self.neighbors
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    /// Undirected edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(3 * self.triangles.len() / 2 + 3);
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (tri[(k + 1) % 3], tri[(k + 2) % 3]);
                // Each interior edge is seen twice; keep the copy from the
                // lower triangle id.
                match self.neighbors[t][k] {
                    Some(n) if n < t => {}
                    _ => edges.push((a.min(b), a.max(b))),
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Directed hull edges `(a, b)` with the interior on the left.
    pub fn hull_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                if self.neighbors[t][k].is_none() {
                    out.push((tri[(k + 1) % 3], tri[(k + 2) % 3]));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Builds the Delaunay triangulation of `points`, inserting them in input
/// order. Points must be pairwise distinct (see
/// [`dedupe_points`](super::dedupe_points)).
pub fn build_delaunay(points: &[Point2]) -> Result<Triangulation> {
    check_finite(points)?;
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 distinct points, got {}",
            points.len()
        )));
    }
    let third = (2..points.len())
        .find(|&k| orient2d_sign(points[0], points[1], points[k]) != 0)
        .ok_or_else(|| Error::DegenerateInput("all points are collinear".into()))?;

    let mut mesh = Mesh::new(points, third);
    for v in (2..points.len()).filter(|&v| v != third) {
        mesh.insert(v)?;
    }
    Ok(mesh.finish())
}

struct Mesh<'a> {
    pts: &'a [Point2],
    tri: Vec<[usize; 3]>,
    nbr: Vec<[usize; 3]>,
    alive: Vec<bool>,
    stamp: Vec<usize>,
    last: usize,
}

impl<'a> Mesh<'a> {
    fn new(pts: &'a [Point2], third: usize) -> Self {
        let first = if orient2d_sign(pts[0], pts[1], pts[third]) > 0 {
            [0, 1, third]
        } else {
            [1, 0, third]
        };
        let [a, b, c] = first;
        let tri = vec![first, [b, a, GHOST], [c, b, GHOST], [a, c, GHOST]];
        let mut mesh = Mesh {
            pts,
            nbr: vec![[usize::MAX; 3]; tri.len()],
            alive: vec![true; tri.len()],
            stamp: vec![0; tri.len()],
            tri,
            last: 0,
        };
        let mut directed: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for t in 0..mesh.tri.len() {
            for k in 0..3 {
                let e = mesh.edge(t, k);
                directed.insert(e, (t, k));
            }
        }
        for t in 0..mesh.tri.len() {
            for k in 0..3 {
                let (u, v) = mesh.edge(t, k);
                mesh.nbr[t][k] = directed[&(v, u)].0;
            }
        }
        mesh
    }

    /// Directed edge opposite slot `k`.
    fn edge(&self, t: usize, k: usize) -> (usize, usize) {
        let tr = self.tri[t];
        (tr[(k + 1) % 3], tr[(k + 2) % 3])
    }

    fn ghost_slot(&self, t: usize) -> Option<usize> {
        self.tri[t].iter().position(|&v| v == GHOST)
    }

    fn in_conflict(&self, t: usize, v: usize) -> bool {
        let p = self.pts[v];
        match self.ghost_slot(t) {
            None => {
                let [a, b, c] = self.tri[t];
                incircle_perturbed(self.pts, [a, b, c, v]) > 0
            }
            Some(g) => {
                let (a, b) = self.edge(t, g);
                let (pa, pb) = (self.pts[a], self.pts[b]);
                match orient2d_sign(pa, pb, p) {
                    1 => true,
                    0 => strictly_between(pa, pb, p),
                    _ => false,
                }
            }
        }
    }

    /// Visibility walk from the most recent triangle to one containing `v`
    /// (or to a ghost triangle whose hull edge sees `v`).
    fn locate(&self, v: usize) -> usize {
        let p = self.pts[v];
        let mut t = self.last;
        let limit = 4 * self.tri.len() + 16;
        'walk: for _ in 0..limit {
            if self.ghost_slot(t).is_some() {
                return t;
            }
            for k in 0..3 {
                let (a, b) = self.edge(t, k);
                if orient2d_sign(self.pts[a], self.pts[b], p) < 0 {
                    t = self.nbr[t][k];
                    continue 'walk;
                }
            }
            return t;
        }
        // Not reached on a Delaunay mesh; kept as a safety net.
        (0..self.tri.len())
            .find(|&t| self.alive[t] && self.in_conflict(t, v))
            .unwrap_or(self.last)
    }

    fn insert(&mut self, v: usize) -> Result<()> {
        let start = self.locate(v);
        if !self.in_conflict(start, v) {
            return Err(Error::DegenerateInput(format!(
                "vertex {v} could not be located (duplicate point?)"
            )));
        }

        // Grow the conflict region.
        let mark = v + 1;
        let mut cavity = vec![start];
        self.stamp[start] = mark;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for k in 0..3 {
                let n = self.nbr[t][k];
                if self.stamp[n] != mark && self.in_conflict(n, v) {
                    self.stamp[n] = mark;
                    cavity.push(n);
                    stack.push(n);
                }
            }
        }

        // Fan the cavity boundary around v.
        let mut starts: HashMap<usize, usize> = HashMap::new();
        let mut ends: HashMap<usize, usize> = HashMap::new();
        let mut created = Vec::new();
        for &t in &cavity {
            for k in 0..3 {
                let outer = self.nbr[t][k];
                if self.stamp[outer] == mark {
                    continue;
                }
                let (a, b) = self.edge(t, k);
                let id = self.tri.len();
                self.tri.push([a, b, v]);
                self.nbr.push([usize::MAX, usize::MAX, outer]);
                self.alive.push(true);
                self.stamp.push(0);
                let back = self.nbr[outer]
                    .iter()
                    .position(|&x| x == t)
                    .expect("adjacency is symmetric");
                self.nbr[outer][back] = id;
                starts.insert(a, id);
                ends.insert(b, id);
                created.push(id);
            }
        }
        for &id in &created {
            let [a, b, _] = self.tri[id];
            self.nbr[id][0] = starts[&b];
            self.nbr[id][1] = ends[&a];
        }
        for &t in &cavity {
            self.alive[t] = false;
        }
        self.last = created
            .iter()
            .rev()
            .copied()
            .find(|&t| self.ghost_slot(t).is_none())
            .expect("inserting a vertex creates at least one finite triangle");
        Ok(())
    }

    fn finish(self) -> Triangulation {
        let mut index = vec![None; self.tri.len()];
        let mut triangles = Vec::new();
        for (t, slot) in index.iter_mut().enumerate() {
            if self.alive[t] && self.ghost_slot(t).is_none() {
                *slot = Some(triangles.len());
                triangles.push(self.tri[t]);
            }
        }
        let neighbors = (0..self.tri.len())
            .filter(|&t| index[t].is_some())
            .map(|t| self.nbr[t].map(|n| index[n]))
            .collect();
        Triangulation {
            points: self.pts.to_vec(),
            triangles,
            neighbors,
        }
    }
}

/// `p` lies strictly inside segment `ab`, given the three are collinear.
fn strictly_between(a: Point2, b: Point2, p: Point2) -> bool {
    let within = |lo: f64, hi: f64, v: f64| lo.min(hi) < v && v < lo.max(hi);
    if a.x != b.x {
        within(a.x, b.x, p.x)
    } else {
        within(a.y, b.y, p.y)
    }
}
