//! Gaussian potential field over a point set and the strict total order on
//! points that breaks potential ties by index.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{two_sum, Point2};

/// Distance used both inside the kernel and when choosing the nearest lower
/// neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Metric {
    #[default]
    Euclidean,
    /// Squared Euclidean distance. Orders pairs exactly like `Euclidean`
    /// without the square root; the kernel treats it as `Euclidean`.
    SquaredEuclidean,
    Manhattan,
}

impl Metric {
    pub fn distance(&self, p: Point2, q: Point2) -> f64 {
        let (dx, dy) = (p.x - q.x, p.y - q.y);
        match self {
            Metric::Euclidean => dx.hypot(dy),
            Metric::SquaredEuclidean => dx * dx + dy * dy,
            Metric::Manhattan => dx.abs() + dy.abs(),
        }
    }

    /// Squared distance as it enters the kernel `exp(-d^2 / sigma)`.
    pub fn kernel_sq(&self, p: Point2, q: Point2) -> f64 {
        let (dx, dy) = (p.x - q.x, p.y - q.y);
        match self {
            Metric::Euclidean | Metric::SquaredEuclidean => dx * dx + dy * dy,
            Metric::Manhattan => {
                let d = dx.abs() + dy.abs();
                d * d
            }
        }
    }

    /// A value monotone in the distance, used for nearest-neighbor
    /// comparisons. Euclidean distances are compared squared so that exact
    /// ties are not manufactured by the rounding of a square root.
    pub fn compare_key(&self, p: Point2, q: Point2) -> f64 {
        match self {
            Metric::Euclidean | Metric::SquaredEuclidean => {
                let (dx, dy) = (p.x - q.x, p.y - q.y);
                dx * dx + dy * dy
            }
            Metric::Manhattan => self.distance(p, q),
        }
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, Metric::Euclidean | Metric::SquaredEuclidean)
    }
}

pub fn distance(metric: Metric, p: Point2, q: Point2) -> f64 {
    metric.distance(p, q)
}

/// Whether the `j = i` term (always `exp(0) = 1`) is part of each sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelfTerm {
    #[default]
    Include,
    Exclude,
}

/// Per-point potentials `P_i = -sum_j exp(-d(i, j)^2 / sigma)`.
///
/// Besides the rounded values, each point keeps `shifted`, the sum over the
/// other locations, and an order key holding `shifted - own copies` exactly
/// as an unevaluated pair. Separations that `-(1 + s)` would round away
/// (isolated points at small `sigma`) survive in the order.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField {
    sigma: f64,
    values: Vec<f64>,
    shifted: Vec<f64>,
    key: Vec<(f64, f64)>,
}

impl PotentialField {
    /// Wraps precomputed values (used by tests and tools that load fields).
    /// The order is taken from `values` directly.
    pub fn from_values(sigma: f64, values: Vec<f64>) -> Result<Self> {
        validate_sigma(sigma)?;
        let shifted = values.clone();
        let key = values.iter().map(|&v| (v, 0.0)).collect();
        Ok(Self {
            sigma,
            values,
            shifted,
            key,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// Field over `ids.len()` points where point `t` copies point `ids[t]`.
    pub fn gather(&self, ids: &[usize]) -> Self {
        Self {
            sigma: self.sigma,
            values: ids.iter().map(|&u| self.values[u]).collect(),
            shifted: ids.iter().map(|&u| self.shifted[u]).collect(),
            key: ids.iter().map(|&u| self.key[u]).collect(),
        }
    }

    /// Potentials without the terms of the point's own location. When every
    /// point has the same multiplicity these order the points exactly as the
    /// field does.
    pub fn shifted(&self) -> &[f64] {
        &self.shifted
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `k` precedes `i`: lower potential, or equal potential and lower index.
    /// This is a strict total order on vertex ids.
    #[inline]
    pub fn strictly_lower(&self, k: usize, i: usize) -> bool {
        // (hi, lo) pairs from two_sum compare lexicographically like the
        // exact sums they represent.
        let (pk, pi) = (self.key[k], self.key[i]);
        pk < pi || (pk == pi && k < i)
    }
}

pub fn strictly_lower(field: &PotentialField, k: usize, i: usize) -> bool {
    field.strictly_lower(k, i)
}

fn validate_sigma(sigma: f64) -> Result<()> {
    if sigma > 0.0 && sigma.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "sigma must be a positive finite number, got {sigma}"
        )))
    }
}

/// Potentials with every point counted once and the self-term included.
pub fn compute_potentials(points: &[Point2], sigma: f64, metric: Metric) -> Result<PotentialField> {
    compute_potentials_with(points, None, sigma, metric, SelfTerm::Include)
}

/// General form: `multiplicity[j]` copies of point `j` (all ones when `None`),
/// optionally leaving out one copy of the point itself.
///
/// Each `P_i` sums over `j` in ascending order with compensated accumulation,
/// so results do not depend on how the outer loop is split across threads.
pub fn compute_potentials_with(
    points: &[Point2],
    multiplicity: Option<&[usize]>,
    sigma: f64,
    metric: Metric,
    self_term: SelfTerm,
) -> Result<PotentialField> {
    validate_sigma(sigma)?;
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(m) = multiplicity {
        if m.len() != points.len() {
            return Err(Error::LengthMismatch {
                left: points.len(),
                right: m.len(),
            });
        }
    }
    let weight = |j: usize| multiplicity.map_or(1.0, |m| m[j] as f64);

    let sums: Vec<(f64, f64, f64)> = (0..points.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = CompensatedSum::default();
            for (j, &q) in points.iter().enumerate() {
                if j != i {
                    acc.add(weight(j) * (-metric.kernel_sq(points[i], q) / sigma).exp());
                }
            }
            let cross = acc.value();
            let own = match self_term {
                SelfTerm::Include => weight(i),
                SelfTerm::Exclude => weight(i) - 1.0,
            };
            acc.add(own);
            (-acc.value(), -cross, own)
        })
        .collect();
    let mut values = Vec::with_capacity(sums.len());
    let mut shifted = Vec::with_capacity(sums.len());
    let mut key = Vec::with_capacity(sums.len());
    for (v, s, own) in sums {
        values.push(v);
        shifted.push(s);
        key.push(two_sum(s, -own));
    }
    Ok(PotentialField {
        sigma,
        values,
        shifted,
        key,
    })
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}
