mod common;

use std::collections::BTreeSet;

use common::*;
use dgcluster::intree::{
    build_forest, directed_neighbor, lower_neighbor_set, resolve_roots, validate_forest,
};
use dgcluster::potential::compute_potentials;
use dgcluster::proxgraphs::build_graph;
use dgcluster::{GraphKind, Metric, NeighborGraph, Point2, PotentialField};
use proptest::prelude::*;

fn check(
    pts: &[Point2],
    graph: &NeighborGraph,
    field: &PotentialField,
) -> Result<(), TestCaseError> {
    let edges: BTreeSet<Edge> = graph.edges().into_iter().collect();
    let adj = adjacency(pts.len(), &edges);
    let forest = build_forest(graph, field, pts, Metric::Euclidean).unwrap();
    let oracle = forest_parents(pts, &adj, field.shifted());
    prop_assert_eq!(forest.parents(), oracle.as_slice());
    for (i, &expected) in oracle.iter().enumerate() {
        let mut k = lower_neighbor_set(i, graph, field);
        k.sort_unstable();
        let mut ko = lower_set(i, &adj, field.shifted());
        ko.sort_unstable();
        prop_assert_eq!(k, ko);
        prop_assert_eq!(
            directed_neighbor(i, graph, field, pts, Metric::Euclidean),
            expected
        );
    }
    let report = validate_forest(&forest, field, graph);
    prop_assert!(report.is_valid(), "{:?}", report.violations);
    let labeling = resolve_roots(&forest).unwrap();
    prop_assert_eq!(labeling.num_clusters(), local_minima(&adj, field.shifted()));
    prop_assert_eq!(forest.num_edges(), pts.len() - labeling.num_clusters());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forest_matches_oracle_on_any_graph(
        seed in any::<u64>(),
        n in 4usize..120,
        log_sigma in -2.0f64..4.0,
        kind in prop_oneof![
            Just(GraphKind::Delaunay),
            Just(GraphKind::Knn(2)),
            Just(GraphKind::MutualKnn(3)),
            Just(GraphKind::Mst),
            Just(GraphKind::Rng),
        ],
    ) {
        let pts = uniform_points(&mut rng(seed), n, 10.0);
        let graph = build_graph(kind, &pts, Metric::Euclidean).unwrap();
        let field = compute_potentials(&pts, 10f64.powf(log_sigma), Metric::Euclidean).unwrap();
        check(&pts, &graph, &field)?;
    }

    #[test]
    fn lattice_ties_are_broken_consistently(
        raw in prop::collection::btree_set((0i32..6, 0i32..6), 3..30),
        sigma in prop_oneof![Just(0.01), Just(1.0), Just(1e6)],
    ) {
        // Symmetric lattices produce equal potentials and equal distances.
        let pts: Vec<Point2> = raw.into_iter().map(|(x, y)| Point2::new(x.into(), y.into())).collect();
        let graph = build_graph(GraphKind::Knn(2), &pts, Metric::Euclidean).unwrap();
        let field = compute_potentials(&pts, sigma, Metric::Euclidean).unwrap();
        check(&pts, &graph, &field)?;
    }
}

#[test]
fn equal_potentials_go_to_the_smaller_id() {
    let pts = [Point2::new(0., 0.), Point2::new(1., 0.)];
    let graph = NeighborGraph::from_edges(2, [(0, 1)]);
    let field = compute_potentials(&pts, 1.0, Metric::Euclidean).unwrap();
    assert_eq!(field.get(0), field.get(1));
    let forest = build_forest(&graph, &field, &pts, Metric::Euclidean).unwrap();
    assert_eq!(forest.parents(), &[None, Some(0)]);
}
