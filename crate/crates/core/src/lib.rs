//! Clustering of planar points by descending, inside the Delaunay graph, to
//! the nearest neighbor of lower potential.
//!
//! The pipeline is:
//!
//! 1. build the Delaunay graph of the points ([`geometry`]),
//! 2. evaluate the Gaussian potential of every point ([`potential`]) and link
//!    each point to its nearest graph neighbor of lower potential, giving a
//!    forest of in-trees ([`intree`]),
//! 3. follow the links to each tree's root; one root is one cluster.
//!
//! [`proxgraphs`] offers k-NN, minimum spanning tree and relative neighborhood
//! graphs in place of the Delaunay graph, [`eval`] ties everything together
//! with data generation, scoring and parameter sweeps, and [`cli`] is the
//! command-line front end.

pub mod cli;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod intree;
pub mod potential;
pub mod proxgraphs;

pub use error::{Error, Result};
pub use eval::{cluster_pipeline, ClusterResult};
pub use geometry::{NeighborGraph, Point2};
pub use intree::{ClusterLabeling, InTreeForest};
pub use potential::{Metric, PotentialField};
pub use proxgraphs::GraphKind;
