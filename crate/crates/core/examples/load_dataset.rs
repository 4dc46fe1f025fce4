//! Clusters a point file (`x y [label]` per line, comma or whitespace
//! separated) and prints a summary; with a label column it also scores the
//! result.
//!
//! cargo run --example load_dataset -- path/to/points.txt 1.5

use dgcluster::eval::{adjusted_rand_index, load_points_csv, normalized_mutual_information};
use dgcluster::{cluster_pipeline, Error, GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    let mut args = std::env::args().skip(1);
    let (Some(path), Some(sigma)) = (args.next(), args.next()) else {
        eprintln!("usage: load_dataset <points file> <sigma>");
        std::process::exit(1);
    };
    let sigma: f64 = sigma
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad sigma `{sigma}`")))?;
    let table = load_points_csv(&path)?;
    let result = cluster_pipeline(&table.points, sigma, GraphKind::Delaunay, Metric::Euclidean)?;
    println!(
        "{path}: {} points, {} clusters",
        table.points.len(),
        result.num_clusters()
    );
    if result.dedup.has_duplicates() {
        println!("{} distinct locations", result.dedup.unique_len());
    }
    if let Some(labels) = &table.labels {
        println!("ARI {:.4}", adjusted_rand_index(result.labels(), labels)?);
        println!(
            "NMI {:.4}",
            normalized_mutual_information(result.labels(), labels)?
        );
    }
    Ok(())
}
