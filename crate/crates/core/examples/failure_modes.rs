//! Data where the choice of sigma is delicate: two touching blobs, and a
//! dense blob beside a sparse one. The window of sigma giving the right
//! count is narrow, and the 2-NN graph shows how a sparse graph adds roots.
//!
//! cargo run --example failure_modes

use dgcluster::eval::{adjusted_rand_index, generate_mixture, MixtureSpec};
use dgcluster::{cluster_pipeline, GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    for preset in ["touching", "unbalanced"] {
        let spec = MixtureSpec::preset(preset, 3)?;
        let (points, truth) = generate_mixture(&spec)?;
        println!(
            "{preset} ({} components, {} points)",
            spec.components.len(),
            points.len()
        );
        for sigma in [0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
            let r = cluster_pipeline(&points, sigma, GraphKind::Delaunay, Metric::Euclidean)?;
            let ari = adjusted_rand_index(r.labels(), &truth)?;
            println!(
                "  sigma {sigma:>5}: {:>3} clusters, ARI {ari:.3}",
                r.num_clusters()
            );
        }
    }

    // A 2-NN graph loses the edges that bridge sparse regions, so descent
    // stops early and spurious roots appear.
    let (points, _) = generate_mixture(&MixtureSpec::preset("two-gaussian", 7)?)?;
    for kind in [GraphKind::Delaunay, GraphKind::Knn(2)] {
        let r = cluster_pipeline(&points, 2.0, kind, Metric::Euclidean)?;
        println!("two-gaussian on {kind}: {} clusters", r.num_clusters());
    }
    Ok(())
}
