use std::collections::HashMap;

use crate::error::{Error, Result};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Bitwise key used for exact duplicate detection. `-0.0` and `0.0` are
    /// folded together since they denote the same location.
    fn key(&self) -> (u64, u64) {
        let canon = |v: f64| if v == 0.0 { 0u64 } else { v.to_bits() };
        (canon(self.x), canon(self.y))
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

/// Checks every coordinate is finite, reporting the first offending index.
pub fn check_finite(points: &[Point2]) -> Result<()> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// Exact-duplicate merge of a point list.
#[derive(Debug, Clone, PartialEq)]
pub struct DedupMap {
    pub unique_points: Vec<Point2>,
    /// `remap[original] = unique index`.
    pub remap: Vec<usize>,
    /// `representative[unique] = smallest original index mapping to it`.
    pub representative: Vec<usize>,
}

impl DedupMap {
    pub fn unique_len(&self) -> usize {
        self.unique_points.len()
    }

    pub fn original_len(&self) -> usize {
        self.remap.len()
    }

    /// Number of originals merged into each unique point.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.unique_len()];
        for &u in &self.remap {
            counts[u] += 1;
        }
        counts
    }

    pub fn has_duplicates(&self) -> bool {
        self.unique_len() != self.original_len()
    }
}

/// Merges points with bitwise-identical coordinates. The representative of
/// each group is its smallest original index, and unique points keep the
/// order of their representatives.
pub fn dedupe_points(points: &[Point2]) -> Result<DedupMap> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_finite(points)?;

    let mut seen: HashMap<(u64, u64), usize> = HashMap::with_capacity(points.len());
    let mut unique_points = Vec::new();
    let mut representative = Vec::new();
    let mut remap = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let u = *seen.entry(p.key()).or_insert_with(|| {
            unique_points.push(*p);
            representative.push(i);
            unique_points.len() - 1
        });
        remap.push(u);
    }
    Ok(DedupMap {
        unique_points,
        remap,
        representative,
    })
}
