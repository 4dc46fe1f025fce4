//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library's algorithms: predicates are decided
//! in exact rational arithmetic (behind a deliberately loose float filter),
//! and every graph or forest is rebuilt by exhaustive search.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use dgcluster::Point2;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Edge = (usize, usize);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_points(rng: &mut ChaCha8Rng, n: usize, side: f64) -> Vec<Point2> {
    (0..n)
        .map(|_| Point2::new(rng.random::<f64>() * side, rng.random::<f64>() * side))
        .collect()
}

fn q(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite coordinate")
}

fn sign(v: &BigRational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

pub fn orient_exact(a: Point2, b: Point2, c: Point2) -> i32 {
    let (ax, ay, bx, by, cx, cy) = (q(a.x), q(a.y), q(b.x), q(b.y), q(c.x), q(c.y));
    sign(&((&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax)))
}

pub fn incircle_exact(a: Point2, b: Point2, c: Point2, d: Point2) -> i32 {
    let row = |p: Point2| {
        let (x, y) = (q(p.x) - q(d.x), q(p.y) - q(d.y));
        let w = &x * &x + &y * &y;
        (x, y, w)
    };
    let (ax, ay, aw) = row(a);
    let (bx, by, bw) = row(b);
    let (cx, cy, cw) = row(c);
    let det = &aw * (&bx * &cy - &by * &cx) - &bw * (&ax * &cy - &ay * &cx)
        + &cw * (&ax * &by - &ay * &bx);
    sign(&det)
}

/// Orientation sign; the float answer is trusted only far outside any
/// plausible rounding error.
pub fn orient(a: Point2, b: Point2, c: Point2) -> i32 {
    let l = (b.x - a.x) * (c.y - a.y);
    let r = (b.y - a.y) * (c.x - a.x);
    let det = l - r;
    let perm = l.abs() + r.abs();
    if perm > 1e-150 && det.abs() > 1e-10 * perm {
        det.signum() as i32
    } else {
        orient_exact(a, b, c)
    }
}

/// Positive when `d` is strictly inside the circle through the
/// counter-clockwise triangle `a b c`.
pub fn incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> i32 {
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);
    let (aw, bw, cw) = (
        adx * adx + ady * ady,
        bdx * bdx + bdy * bdy,
        cdx * cdx + cdy * cdy,
    );
    let t1 = aw * (bdx * cdy - bdy * cdx);
    let t2 = bw * (adx * cdy - ady * cdx);
    let t3 = cw * (adx * bdy - ady * bdx);
    let det = t1 - t2 + t3;
    let perm = aw * ((bdx * cdy).abs() + (bdy * cdx).abs())
        + bw * ((adx * cdy).abs() + (ady * cdx).abs())
        + cw * ((adx * bdy).abs() + (ady * bdx).abs());
    if perm > 1e-150 && det.abs() > 1e-10 * perm {
        det.signum() as i32
    } else {
        incircle_exact(a, b, c, d)
    }
}

/// Triangle whose open circumcircle holds no input point, with a flag set
/// when some other point lies exactly on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EmptyTriangle {
    pub vertices: [usize; 3],
    pub cocircular: bool,
}

/// Every empty-circumcircle triangle, by exhaustive search over triples.
pub fn empty_circle_triangles(pts: &[Point2]) -> Vec<EmptyTriangle> {
    let n = pts.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let o = orient(pts[i], pts[j], pts[k]);
                if o == 0 {
                    continue;
                }
                let (a, b, c) = if o > 0 { (i, j, k) } else { (i, k, j) };
                let mut cocircular = false;
                let mut empty = true;
                for l in 0..n {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    match incircle(pts[a], pts[b], pts[c], pts[l]) {
                        1 => {
                            empty = false;
                            break;
                        }
                        0 => cocircular = true,
                        _ => {}
                    }
                }
                if empty {
                    out.push(EmptyTriangle {
                        vertices: [i, j, k],
                        cocircular,
                    });
                }
            }
        }
    }
    out
}

pub fn triangle_edges<'a>(tris: impl IntoIterator<Item = &'a [usize; 3]>) -> BTreeSet<Edge> {
    let mut set = BTreeSet::new();
    for t in tris {
        let mut v = *t;
        v.sort_unstable();
        set.insert((v[0], v[1]));
        set.insert((v[0], v[2]));
        set.insert((v[1], v[2]));
    }
    set
}

/// Number of input points on the convex hull boundary, collinear boundary
/// points included. Assumes the points are distinct and not all collinear.
pub fn hull_boundary_count(pts: &[Point2]) -> usize {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .x
            .partial_cmp(&pts[b].x)
            .unwrap()
            .then(pts[a].y.partial_cmp(&pts[b].y).unwrap())
    });
    let mut chain: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = chain.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &p in iter {
            while chain.len() >= start + 2
                && orient(
                    pts[chain[chain.len() - 2]],
                    pts[chain[chain.len() - 1]],
                    pts[p],
                ) <= 0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
    }
    let corners = chain;
    let h = corners.len();
    let on_edge = |p: Point2, a: Point2, b: Point2| {
        orient(a, b, p) == 0
            && p.x >= a.x.min(b.x)
            && p.x <= a.x.max(b.x)
            && p.y >= a.y.min(b.y)
            && p.y <= a.y.max(b.y)
    };
    pts.iter()
        .filter(|&&p| (0..h).any(|e| on_edge(p, pts[corners[e]], pts[corners[(e + 1) % h]])))
        .count()
}

pub fn d2(a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (a.x - b.x, a.y - b.y);
    dx * dx + dy * dy
}

/// Union-symmetrized k-NN edges; distance ties go to the smaller id.
pub fn knn_edges(pts: &[Point2], k: usize) -> BTreeSet<Edge> {
    let mut set = BTreeSet::new();
    for i in 0..pts.len() {
        let mut others: Vec<usize> = (0..pts.len()).filter(|&j| j != i).collect();
        others.sort_by(|&a, &b| {
            d2(pts[i], pts[a])
                .total_cmp(&d2(pts[i], pts[b]))
                .then(a.cmp(&b))
        });
        for &j in others.iter().take(k) {
            set.insert((i.min(j), i.max(j)));
        }
    }
    set
}

/// Minimum spanning tree of the complete graph by Prim's algorithm. Edges
/// compare by squared length, then by `(min id, max id)`.
pub fn mst_edges(pts: &[Point2]) -> BTreeSet<Edge> {
    mst_edges_by(pts.len(), |i, j| d2(pts[i], pts[j]))
}

/// Prim's algorithm over `n` vertices with edge length `len(i, j)`.
pub fn mst_edges_by(n: usize, len: impl Fn(usize, usize) -> f64) -> BTreeSet<Edge> {
    let mut in_tree = vec![false; n];
    let mut best: Vec<Option<(f64, usize)>> = vec![None; n];
    let mut set = BTreeSet::new();
    if n == 0 {
        return set;
    }
    in_tree[0] = true;
    let key = |i: usize, j: usize| (len(i, j), i.min(j), i.max(j));
    let less = |a: (f64, usize, usize), b: (f64, usize, usize)| {
        a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)) == Ordering::Less
    };
    for (j, b) in best.iter_mut().enumerate().skip(1) {
        *b = Some((len(0, j), 0));
    }
    for _ in 1..n {
        let mut pick: Option<usize> = None;
        for j in 0..n {
            if in_tree[j] {
                continue;
            }
            let (_, from) = best[j].unwrap();
            if pick.is_none_or(|p| {
                let (_, pf) = best[p].unwrap();
                less(key(from, j), key(pf, p))
            }) {
                pick = Some(j);
            }
        }
        let j = pick.unwrap();
        let (_, from) = best[j].unwrap();
        in_tree[j] = true;
        set.insert((from.min(j), from.max(j)));
        for t in 0..n {
            if !in_tree[t] {
                let (_, cur) = best[t].unwrap();
                if less(key(j, t), key(cur, t)) {
                    best[t] = Some((len(j, t), j));
                }
            }
        }
    }
    set
}

/// Total Euclidean length, summed in ascending order of length.
pub fn total_length(pts: &[Point2], edges: &BTreeSet<Edge>) -> f64 {
    let mut lens: Vec<f64> = edges
        .iter()
        .map(|&(i, j)| d2(pts[i], pts[j]).sqrt())
        .collect();
    lens.sort_by(f64::total_cmp);
    lens.iter().sum()
}

/// Relative neighborhood graph by checking every witness for every pair.
pub fn rng_edges(pts: &[Point2]) -> BTreeSet<Edge> {
    let n = pts.len();
    let mut set = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let dij = d2(pts[i], pts[j]);
            let blocked = (0..n)
                .filter(|&w| w != i && w != j)
                .any(|w| d2(pts[i], pts[w]).max(d2(pts[j], pts[w])) < dij);
            if !blocked {
                set.insert((i, j));
            }
        }
    }
    set
}

/// Adjacency lists from an edge set.
pub fn adjacency(n: usize, edges: &BTreeSet<Edge>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    adj
}

/// Neighbors preceding `i` in the order "smaller key, then smaller id".
pub fn lower_set(i: usize, adj: &[Vec<usize>], key: &[f64]) -> Vec<usize> {
    adj[i]
        .iter()
        .copied()
        .filter(|&k| key[k] < key[i] || (key[k] == key[i] && k < i))
        .collect()
}

/// Parent of every point: the lower neighbor minimizing
/// `(squared distance, id)`; `None` when there is none.
pub fn forest_parents(pts: &[Point2], adj: &[Vec<usize>], key: &[f64]) -> Vec<Option<usize>> {
    (0..pts.len())
        .map(|i| {
            lower_set(i, adj, key).into_iter().min_by(|&a, &b| {
                d2(pts[i], pts[a])
                    .total_cmp(&d2(pts[i], pts[b]))
                    .then(a.cmp(&b))
            })
        })
        .collect()
}

pub fn local_minima(adj: &[Vec<usize>], key: &[f64]) -> usize {
    (0..adj.len())
        .filter(|&i| lower_set(i, adj, key).is_empty())
        .count()
}

/// Gaussian potentials by the textbook double loop.
pub fn naive_potentials(pts: &[Point2], sigma: f64) -> Vec<f64> {
    pts.iter()
        .map(|&p| -pts.iter().map(|&q| (-d2(p, q) / sigma).exp()).sum::<f64>())
        .collect()
}

/// Adjusted Rand index straight from pair counts.
pub fn ari_by_pairs(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len();
    let (mut both, mut only_a, mut only_b, mut neither) = (0f64, 0f64, 0f64, 0f64);
    for i in 0..n {
        for j in i + 1..n {
            match (a[i] == a[j], b[i] == b[j]) {
                (true, true) => both += 1.0,
                (true, false) => only_a += 1.0,
                (false, true) => only_b += 1.0,
                (false, false) => neither += 1.0,
            }
        }
    }
    let pairs = both + only_a + only_b + neither;
    let same_a = both + only_a;
    let same_b = both + only_b;
    let expected = same_a * same_b / pairs;
    let max = (same_a + same_b) / 2.0;
    if max == expected {
        return 1.0;
    }
    (both - expected) / (max - expected)
}
