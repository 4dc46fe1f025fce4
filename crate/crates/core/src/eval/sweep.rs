use rayon::prelude::*;

use super::metrics::{adjusted_rand_index, normalized_mutual_information};
use super::pipeline::cluster_pipeline;
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::potential::Metric;
use crate::proxgraphs::GraphKind;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub sigma: f64,
    pub cluster_count: usize,
    /// Present only when ground truth was supplied.
    pub ari: Option<f64>,
    pub nmi: Option<f64>,
}

/// One independent pipeline run per sigma, rows in input order.
pub fn sweep_sigma(
    points: &[Point2],
    sigmas: &[f64],
    graph_kind: GraphKind,
    metric: Metric,
    truth: Option<&[usize]>,
) -> Result<Vec<SweepRow>> {
    if sigmas.is_empty() {
        return Err(Error::InvalidParameter("empty sigma list".into()));
    }
    if let Some(t) = truth {
        if t.len() != points.len() {
            return Err(Error::LengthMismatch {
                left: points.len(),
                right: t.len(),
            });
        }
    }
    sigmas
        .par_iter()
        .map(|&sigma| {
            let result = cluster_pipeline(points, sigma, graph_kind, metric)?;
            let (ari, nmi) = match truth {
                Some(t) => (
                    Some(adjusted_rand_index(t, result.labels())?),
                    Some(normalized_mutual_information(t, result.labels())?),
                ),
                None => (None, None),
            };
            Ok(SweepRow {
                sigma,
                cluster_count: result.num_clusters(),
                ari,
                nmi,
            })
        })
        .collect()
}

/// `count` values from `lo` to `hi` inclusive, evenly spaced in log scale.
pub fn log_spaced(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > 0.0 && lo.is_finite() && hi.is_finite()) || count == 0 {
        return Err(Error::InvalidParameter(format!(
            "log range needs positive bounds and count >= 1 (got {lo}:{hi}:{count})"
        )));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.log10(), hi.log10());
    let last = (count - 1) as f64;
    Ok((0..count)
        .map(|i| match i {
            0 => lo,
            i if i == count - 1 => hi,
            i => 10f64.powf(a + (b - a) * i as f64 / last),
        })
        .collect())
}
