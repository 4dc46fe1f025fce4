//! Partition agreement scores: adjusted Rand index and normalized mutual
//! information (arithmetic-mean normalization, natural log).

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Contingency table over densified labels (dense ids in order of first
/// appearance, so every sum below runs in a fixed order).
struct Contingency {
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    cells: Vec<Vec<usize>>,
}

fn densify<T: Eq + Hash>(labels: &[T]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<&T, usize> = HashMap::new();
    let dense = labels
        .iter()
        .map(|l| {
            let next = ids.len();
            *ids.entry(l).or_insert(next)
        })
        .collect();
    (dense, ids.len())
}

impl Contingency {
    fn new<A: Eq + Hash, B: Eq + Hash>(a: &[A], b: &[B]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if a.is_empty() {
            return Err(Error::EmptyInput);
        }
        let (da, ka) = densify(a);
        let (db, kb) = densify(b);
        let mut cells = vec![vec![0usize; kb]; ka];
        let mut rows = vec![0usize; ka];
        let mut cols = vec![0usize; kb];
        for (&i, &j) in da.iter().zip(&db) {
            cells[i][j] += 1;
            rows[i] += 1;
            cols[j] += 1;
        }
        Ok(Self {
            n: a.len(),
            rows,
            cols,
            cells,
        })
    }

    /// Both labelings induce the same partition.
    fn same_partition(&self) -> bool {
        self.rows.len() == self.cols.len()
            && self
                .cells
                .iter()
                .zip(&self.rows)
                .all(|(row, &total)| row.contains(&total))
    }
}

fn pairs(m: usize) -> f64 {
    let m = m as f64;
    m * (m - 1.0) / 2.0
}

/// Adjusted Rand index. Two partitions that carry no pair information (a
/// single item, or both trivial in the same way) score 1.
pub fn adjusted_rand_index<A: Eq + Hash, B: Eq + Hash>(a: &[A], b: &[B]) -> Result<f64> {
    let t = Contingency::new(a, b)?;
    let index: f64 = t.cells.iter().flatten().map(|&c| pairs(c)).sum();
    let sum_rows: f64 = t.rows.iter().map(|&c| pairs(c)).sum();
    let sum_cols: f64 = t.cols.iter().map(|&c| pairs(c)).sum();
    let total = pairs(t.n);
    if total == 0.0 {
        return Ok(1.0);
    }
    let expected = sum_rows * sum_cols / total;
    let max_index = 0.5 * (sum_rows + sum_cols);
    let denom = max_index - expected;
    if denom == 0.0 {
        return Ok(1.0);
    }
    Ok((index - expected) / denom)
}

fn entropy(counts: &[usize], n: f64) -> f64 {
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.ln()
        })
        .sum()
}

/// Normalized mutual information, `MI / ((H(a) + H(b)) / 2)`. Equal
/// partitions score exactly 1, which covers two single-cluster ones.
pub fn normalized_mutual_information<A: Eq + Hash, B: Eq + Hash>(a: &[A], b: &[B]) -> Result<f64> {
    let t = Contingency::new(a, b)?;
    let n = t.n as f64;
    let ha = entropy(&t.rows, n);
    let hb = entropy(&t.cols, n);
    if t.same_partition() {
        return Ok(1.0);
    }
    let mut mi = 0.0;
    for (i, row) in t.cells.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                let c = c as f64;
                mi += (c / n) * ((c * n) / (t.rows[i] as f64 * t.cols[j] as f64)).ln();
            }
        }
    }
    Ok((mi / (0.5 * (ha + hb))).clamp(0.0, 1.0))
}
