//! Writes the graph, the potential field and the final forest of the
//! two-Gaussian data as three SVG files.
//!
//! cargo run --example render_svg [out_dir]

use std::path::PathBuf;

use dgcluster::cli::render::{render_svg, ColorBy, EdgeStyle, RenderOptions};
use dgcluster::eval::{
    generate_mixture, result_rows, write_atomic, MixtureSpec, TWO_GAUSSIAN_SEED,
};
use dgcluster::{cluster_pipeline, GraphKind, Metric};

fn main() -> dgcluster::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let (points, _) = generate_mixture(&MixtureSpec::two_gaussian(TWO_GAUSSIAN_SEED))?;
    let result = cluster_pipeline(&points, 2.0, GraphKind::Delaunay, Metric::Euclidean)?;
    let rows = result_rows(&result);
    let edges = result.graph_in_original_ids().edges();

    let panels = [
        ("graph.svg", ColorBy::Cluster, EdgeStyle::Thin, false),
        ("potential.svg", ColorBy::Potential, EdgeStyle::Dashed, true),
        ("clusters.svg", ColorBy::Cluster, EdgeStyle::None, true),
    ];
    for (name, color_by, edge_style, draw_forest) in panels {
        let opts = RenderOptions {
            color_by,
            edge_style,
            draw_forest,
            ..RenderOptions::default()
        };
        let path = dir.join(name);
        write_atomic(&path, render_svg(&rows, Some(&edges), &opts).as_bytes())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
