//! Two well separated blobs, one clustering run at sigma = 2.
//!
//! cargo run --example two_gaussians

use dgcluster::eval::{adjusted_rand_index, generate_mixture, MixtureSpec, TWO_GAUSSIAN_SEED};
use dgcluster::{cluster_pipeline, GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    let (points, truth) = generate_mixture(&MixtureSpec::two_gaussian(TWO_GAUSSIAN_SEED))?;
    let result = cluster_pipeline(&points, 2.0, GraphKind::Delaunay, Metric::Euclidean)?;

    println!(
        "{} points, {} clusters",
        points.len(),
        result.num_clusters()
    );
    println!("cluster sizes: {:?}", result.labeling.cluster_sizes());
    for root in result.forest.roots() {
        let p = points[root];
        println!(
            "root {root:>2} at ({:.3}, {:.3}), potential {:.4}",
            p.x,
            p.y,
            result.field.get(root)
        );
    }
    println!(
        "ARI against the generating labels: {:.4}",
        adjusted_rand_index(result.labels(), &truth)?
    );
    Ok(())
}
