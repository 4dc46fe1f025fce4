//! The three steps by hand: graph, potentials, forest, then roots.
//!
//! cargo run --example potential_field

use dgcluster::intree::{build_forest, lower_neighbor_set, resolve_roots, validate_forest};
use dgcluster::potential::{compute_potentials, compute_potentials_with, SelfTerm};
use dgcluster::proxgraphs::delaunay_graph;
use dgcluster::{Metric, Point2};

fn main() -> dgcluster::Result<()> {
    let points: Vec<Point2> = [
        (0.0, 0.0),
        (0.6, 0.1),
        (0.2, 0.7),
        (0.9, 0.8),
        (1.1, 0.2),
        (5.0, 5.0),
        (5.4, 5.3),
        (4.7, 5.6),
        (5.9, 4.8),
        (2.8, 2.6),
    ]
    .into_iter()
    .map(Point2::from)
    .collect();
    let sigma = 1.0;

    let graph = delaunay_graph(&points)?;
    let field = compute_potentials(&points, sigma, Metric::Euclidean)?;
    let forest = build_forest(&graph, &field, &points, Metric::Euclidean)?;

    println!(
        "{:>3} {:>10} {:>16} {:>6}",
        "i", "potential", "lower neighbors", "parent"
    );
    for i in 0..points.len() {
        let lower = format!("{:?}", lower_neighbor_set(i, &graph, &field));
        let parent = forest
            .parent(i)
            .map_or("root".to_string(), |p| p.to_string());
        println!("{i:>3} {:>10.5} {lower:>16} {parent:>6}", field.get(i));
    }

    let labeling = resolve_roots(&forest)?;
    println!("labels {:?}", labeling.labels());
    println!(
        "forest valid: {}",
        validate_forest(&forest, &field, &graph).is_valid()
    );

    // Leaving out exp(0) = 1 shifts every value and changes nothing else.
    let without =
        compute_potentials_with(&points, None, sigma, Metric::Euclidean, SelfTerm::Exclude)?;
    let same = build_forest(&graph, &without, &points, Metric::Euclidean)? == forest;
    println!("same forest without the self-term: {same}");
    Ok(())
}
