//! Every graph kind on the same data: edge counts, the subgraph chain and
//! the cluster count each graph produces.
//!
//! cargo run --example proximity_graphs

use dgcluster::eval::{generate_mixture, MixtureSpec};
use dgcluster::proxgraphs::build_graph;
use dgcluster::{cluster_pipeline, GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    let (points, _) = generate_mixture(&MixtureSpec::preset("three-gaussian", 1)?)?;
    let kinds = [
        GraphKind::Delaunay,
        GraphKind::Rng,
        GraphKind::Mst,
        GraphKind::Knn(2),
        GraphKind::Knn(6),
        GraphKind::MutualKnn(6),
    ];
    println!("{:<14} {:>6} {:>9}", "graph", "edges", "clusters");
    for kind in kinds {
        let graph = build_graph(kind, &points, Metric::Euclidean)?;
        let result = cluster_pipeline(&points, 2.0, kind, Metric::Euclidean)?;
        println!(
            "{:<14} {:>6} {:>9}",
            kind.to_string(),
            graph.num_edges(),
            result.num_clusters()
        );
    }

    let dg = build_graph(GraphKind::Delaunay, &points, Metric::Euclidean)?;
    let rng = build_graph(GraphKind::Rng, &points, Metric::Euclidean)?;
    let mst = build_graph(GraphKind::Mst, &points, Metric::Euclidean)?;
    println!(
        "mst in rng: {}, rng in delaunay: {}",
        mst.is_subgraph_of(&rng),
        rng.is_subgraph_of(&dg)
    );

    let manhattan = cluster_pipeline(&points, 2.0, GraphKind::Mst, Metric::Manhattan)?;
    println!(
        "manhattan spanning tree: {} clusters",
        manhattan.num_clusters()
    );
    Ok(())
}
