use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Seed of the reference two-Gaussian dataset used throughout the tests and
/// examples.
pub const TWO_GAUSSIAN_SEED: u64 = 7;

/// One isotropic-per-axis Gaussian blob.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub mean: Point2,
    /// Standard deviation along x and y.
    pub stddev: (f64, f64),
    pub count: usize,
}

impl Component {
    pub fn new(mean: (f64, f64), stddev: f64, count: usize) -> Self {
        Self {
            mean: mean.into(),
            stddev: (stddev, stddev),
            count,
        }
    }
}

/// A seeded Gaussian mixture. Samples come from ChaCha8 seeded with `seed`,
/// turned into normals with the Box-Muller transform, component after
/// component.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureSpec {
    pub components: Vec<Component>,
    pub seed: u64,
}

impl MixtureSpec {
    /// Means `(0, 0)` and `(10, 10)`, unit deviation, 30 points each.
    pub fn two_gaussian(seed: u64) -> Self {
        Self {
            components: vec![
                Component::new((0.0, 0.0), 1.0, 30),
                Component::new((10.0, 10.0), 1.0, 30),
            ],
            seed,
        }
    }

    /// Named presets: `two-gaussian`, `three-gaussian`, `unbalanced` (a
    /// dense blob next to a sparse one) and `touching` (two overlapping
    /// blobs, where a single extra or missing root is easy to provoke).
    pub fn preset(name: &str, seed: u64) -> Result<Self> {
        let components = match name {
            "two-gaussian" => return Ok(Self::two_gaussian(seed)),
            "three-gaussian" => vec![
                Component::new((0.0, 0.0), 1.0, 40),
                Component::new((8.0, 0.0), 1.0, 40),
                Component::new((4.0, 7.0), 1.0, 40),
            ],
            "unbalanced" => vec![
                Component::new((0.0, 0.0), 0.5, 120),
                Component::new((6.0, 0.0), 2.0, 40),
            ],
            "touching" => vec![
                Component::new((0.0, 0.0), 1.0, 60),
                Component::new((3.0, 0.0), 1.0, 60),
            ],
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown dataset preset `{other}`"
                )))
            }
        };
        Ok(Self { components, seed })
    }

    pub fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::InvalidParameter("mixture has no components".into()));
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.count == 0 {
                return Err(Error::InvalidParameter(format!(
                    "component {i} has count 0"
                )));
            }
            let (sx, sy) = c.stddev;
            if !(sx > 0.0 && sy > 0.0 && sx.is_finite() && sy.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "component {i} needs positive standard deviations"
                )));
            }
            if !c.mean.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "component {i} has a non-finite mean"
                )));
            }
        }
        Ok(())
    }

    pub fn total_count(&self) -> usize {
        self.components.iter().map(|c| c.count).sum()
    }
}

/// Standard normal pair via Box-Muller.
fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    // 1 - u lies in (0, 1], so the logarithm is finite.
    let u1 = 1.0 - rng.random::<f64>();
    let u2 = rng.random::<f64>();
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = std::f64::consts::TAU * u2;
    (r * theta.cos(), r * theta.sin())
}

/// Samples the mixture; labels are component indices.
pub fn generate_mixture(spec: &MixtureSpec) -> Result<(Vec<Point2>, Vec<usize>)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut points = Vec::with_capacity(spec.total_count());
    let mut labels = Vec::with_capacity(spec.total_count());
    for (label, c) in spec.components.iter().enumerate() {
        for _ in 0..c.count {
            let (zx, zy) = normal_pair(&mut rng);
            points.push(Point2::new(
                c.mean.x + c.stddev.0 * zx,
                c.mean.y + c.stddev.1 * zy,
            ));
            labels.push(label);
        }
    }
    Ok((points, labels))
}
