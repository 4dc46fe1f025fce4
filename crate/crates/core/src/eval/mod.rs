//! Datasets, the end-to-end pipeline, agreement scores and sigma sweeps.

mod io;
mod metrics;
mod mixture;
mod pipeline;
mod sweep;

pub use io::{
    fmt_f64, load_points_csv, parse_points, parse_result_csv, points_csv, read_result_csv,
    result_csv, result_rows, sweep_csv, write_atomic, write_result_csv, PointTable, ResultRow,
    RESULT_HEADER, SWEEP_HEADER,
};
pub use metrics::{adjusted_rand_index, normalized_mutual_information};
pub use mixture::{generate_mixture, Component, MixtureSpec, TWO_GAUSSIAN_SEED};
pub use pipeline::{
    cluster_pipeline, pipeline_graph, run_pipeline, with_threads, ClusterResult, PipelineConfig,
};
pub use sweep::{log_spaced, sweep_sigma, SweepRow};
