//! Exact predicates and the Delaunay triangulation of a small point set,
//! including the degenerate inputs the builder refuses.
//!
//! cargo run --example delaunay_graph

use dgcluster::geometry::{adjacency, build_delaunay, in_circumcircle, orient2d};
use dgcluster::Point2;

fn main() -> dgcluster::Result<()> {
    let p = Point2::new;

    // Nearly collinear: the float determinant is swamped by rounding.
    let (a, b, c) = (p(0.5, 0.5), p(12.0, 12.0), p(24.0, 24.0 + 1e-14));
    println!("c sits 1e-14 above the line ab: {:?}", orient2d(a, b, c));
    let (a, b, c, d) = (p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.));
    println!(
        "unit square corner vs circle: {:?}",
        in_circumcircle(a, b, c, d)?
    );

    let points = [
        p(0., 0.),
        p(4., 0.),
        p(4., 3.),
        p(0., 3.),
        p(2., 1.5),
        p(1., 2.5),
        p(3.2, 0.4),
    ];
    let tri = build_delaunay(&points)?;
    println!("{} triangles:", tri.triangles().len());
    for t in tri.triangles() {
        println!("  {t:?}");
    }
    let graph = adjacency(&tri);
    println!("{} edges, hull {:?}", graph.num_edges(), tri.hull_edges());
    for i in 0..points.len() {
        println!("  {i}: {:?}", graph.neighbors(i));
    }

    for bad in [
        vec![p(0., 0.), p(1., 1.)],
        vec![p(0., 0.), p(1., 1.), p(2., 2.)],
    ] {
        println!(
            "{} points: {}",
            bad.len(),
            build_delaunay(&bad).unwrap_err()
        );
    }
    Ok(())
}
