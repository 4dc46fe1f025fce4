//! How the cluster count responds to sigma, scored against the generating
//! labels.
//!
//! cargo run --example sigma_sweep [preset]

use dgcluster::eval::{generate_mixture, log_spaced, sweep_sigma, MixtureSpec};
use dgcluster::{GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    let preset = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "two-gaussian".into());
    let (points, truth) = generate_mixture(&MixtureSpec::preset(&preset, 7)?)?;
    let sigmas = log_spaced(1e-2, 1e4, 13)?;
    let rows = sweep_sigma(
        &points,
        &sigmas,
        GraphKind::Delaunay,
        Metric::Euclidean,
        Some(&truth),
    )?;

    println!("{preset}: {} points", points.len());
    println!(
        "{:>12} {:>8} {:>7} {:>7}",
        "sigma", "clusters", "ari", "nmi"
    );
    for r in rows {
        println!(
            "{:>12.4e} {:>8} {:>7.3} {:>7.3}",
            r.sigma,
            r.cluster_count,
            r.ari.unwrap_or(f64::NAN),
            r.nmi.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
