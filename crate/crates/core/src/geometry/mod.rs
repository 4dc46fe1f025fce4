//! Planar geometry: points, exact predicates, Delaunay triangulation and
//! the neighbor graphs derived from it.

mod delaunay;
mod expansion;
mod graph;
mod point;
mod predicates;

pub use delaunay::{build_delaunay, Triangulation};
pub use graph::{adjacency, chain_graph, parse_edge_list, NeighborGraph};
pub use point::{check_finite, dedupe_points, DedupMap, Point2};
pub use predicates::{in_circumcircle, orient2d, CirclePosition, Orientation};

pub(crate) use expansion::two_sum;
pub(crate) use predicates::orient2d_sign;
