mod common;

use std::collections::BTreeSet;

use common::*;
use dgcluster::proxgraphs::{
    build_graph, delaunay_graph, emst_graph, knn_graph, mutual_knn_graph, rng_graph,
};
use dgcluster::{Error, GraphKind, Metric, NeighborGraph, Point2};
use proptest::prelude::*;

fn edge_set(g: &NeighborGraph) -> BTreeSet<Edge> {
    g.edges().into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn knn_matches_brute_force(seed in any::<u64>(), n in 2usize..60, k in 1usize..8) {
        let pts = uniform_points(&mut rng(seed), n, 1.0);
        let k = k.min(n - 1);
        let g = knn_graph(&pts, k, Metric::Euclidean).unwrap();
        prop_assert_eq!(edge_set(&g), knn_edges(&pts, k));
        let m = mutual_knn_graph(&pts, k, Metric::Euclidean).unwrap();
        prop_assert!(m.is_subgraph_of(&g));
        for i in 0..n {
            prop_assert!(g.degree(i) >= k);
        }
    }

    #[test]
    fn subgraph_chain_and_oracles(seed in any::<u64>(), n in 3usize..80) {
        let pts = uniform_points(&mut rng(seed), n, 1.0);
        let dg = delaunay_graph(&pts).unwrap();
        let rg = rng_graph(&pts, Metric::Euclidean).unwrap();
        let mst = emst_graph(&pts, Metric::Euclidean).unwrap();
        prop_assert!(mst.is_subgraph_of(&rg));
        prop_assert!(rg.is_subgraph_of(&dg));
        prop_assert_eq!(mst.num_edges(), n - 1);
        prop_assert_eq!(edge_set(&rg), rng_edges(&pts));
        prop_assert_eq!(edge_set(&mst), mst_edges(&pts));
    }

    #[test]
    fn lattice_inputs_keep_the_chain(raw in prop::collection::btree_set((0i32..5, 0i32..5), 3..20)) {
        let pts: Vec<Point2> = raw.into_iter().map(|(x, y)| Point2::new(x.into(), y.into())).collect();
        let Ok(dg) = delaunay_graph(&pts) else { return Ok(()); };
        let rg = rng_graph(&pts, Metric::Euclidean).unwrap();
        let mst = emst_graph(&pts, Metric::Euclidean).unwrap();
        prop_assert!(mst.is_subgraph_of(&rg));
        prop_assert!(rg.is_subgraph_of(&dg));
        prop_assert_eq!(edge_set(&rg), rng_edges(&pts));
        prop_assert_eq!(edge_set(&mst), mst_edges(&pts));
    }
}

#[test]
fn manhattan_graphs_match_brute_force() {
    let pts = uniform_points(&mut rng(21), 40, 1.0);
    let l1 = |i: usize, j: usize| (pts[i].x - pts[j].x).abs() + (pts[i].y - pts[j].y).abs();
    let g = emst_graph(&pts, Metric::Manhattan).unwrap();
    assert_eq!(edge_set(&g), mst_edges_by(pts.len(), l1));
    let rg = rng_graph(&pts, Metric::Manhattan).unwrap();
    assert!(g.is_subgraph_of(&rg));
    for (i, j) in rg.edges() {
        assert!((0..pts.len()).all(|w| w == i || w == j || l1(i, w).max(l1(j, w)) >= l1(i, j)));
    }
}

#[test]
fn dispatch_agrees_with_direct_calls() {
    let pts = uniform_points(&mut rng(5), 50, 1.0);
    let m = Metric::Euclidean;
    assert_eq!(
        build_graph(GraphKind::Delaunay, &pts, m).unwrap(),
        delaunay_graph(&pts).unwrap()
    );
    assert_eq!(
        build_graph(GraphKind::Knn(3), &pts, m).unwrap(),
        knn_graph(&pts, 3, m).unwrap()
    );
    assert_eq!(
        build_graph(GraphKind::MutualKnn(3), &pts, m).unwrap(),
        mutual_knn_graph(&pts, 3, m).unwrap()
    );
    assert_eq!(
        build_graph(GraphKind::Mst, &pts, m).unwrap(),
        emst_graph(&pts, m).unwrap()
    );
    assert_eq!(
        build_graph(GraphKind::Rng, &pts, m).unwrap(),
        rng_graph(&pts, m).unwrap()
    );
}

#[test]
fn knn_rejects_out_of_range_k() {
    let pts = uniform_points(&mut rng(5), 5, 1.0);
    for k in [0, 5, 6] {
        assert!(matches!(
            knn_graph(&pts, k, Metric::Euclidean),
            Err(Error::InvalidParameter(_))
        ));
    }
}
