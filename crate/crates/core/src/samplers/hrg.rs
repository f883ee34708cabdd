use std::f64::consts::TAU;
use std::path::Path;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use super::coords;
use crate::error::{Error, Result};
use crate::geometry::{radial_quantile, HrgParams, PolarPoint};
use crate::rng::{self, streams};

/// Vertex positions of one HRG instance; vertex ids are indices into
/// `points`.
#[derive(Debug, Clone, PartialEq)]
pub struct HrgPointSet {
    pub params: HrgParams,
    pub points: Vec<PolarPoint>,
    pub seed: u64,
}

impl HrgPointSet {
    pub fn new(params: HrgParams, points: Vec<PolarPoint>, seed: u64) -> Result<Self> {
        let big_r = params.radius();
        if let Some((i, p)) = points
            .iter()
            .enumerate()
            .find(|(_, p)| !(p.radius >= 0.0 && p.radius <= big_r) || !p.angle.is_finite())
        {
            return Err(Error::invalid(format!(
                "point {i} at radius {} lies outside the disk of radius {big_r}",
                p.radius
            )));
        }
        Ok(HrgPointSet {
            params,
            points,
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Writes one `id radius angle` line per vertex, 17 significant digits.
    pub fn write_coordinates(&self, path: &Path) -> Result<()> {
        coords::write(path, self.points.iter().map(|p| (p.radius, p.angle)))
    }

    pub fn read_coordinates(path: &Path, params: HrgParams, seed: u64) -> Result<Self> {
        let rows = coords::read(path)?;
        let points = rows
            .into_iter()
            .map(|(r, a)| PolarPoint::new(r, a))
            .collect();
        Self::new(params, points, seed)
    }
}

/// Draw order per vertex: radius uniform, then angle uniform.
fn draw_points(rng: &mut ChaCha8Rng, count: usize, params: &HrgParams) -> Vec<PolarPoint> {
    (0..count)
        .map(|_| {
            let u: f64 = rng.random();
            let radius = radial_quantile(u, params).expect("uniform draw lies in [0, 1)");
            let angle = TAU * rng.random::<f64>();
            PolarPoint::new(radius, angle)
        })
        .collect()
}

/// Samples `n` i.i.d. points from `μ` on the disk.
pub fn sample_hrg(params: &HrgParams, seed: u64) -> HrgPointSet {
    let mut rng = rng::stream(seed, streams::POSITIONS);
    HrgPointSet {
        params: *params,
        points: draw_points(&mut rng, params.n(), params),
        seed,
    }
}

/// Poissonized HRG: the vertex count is `Poisson(n)`.
pub fn sample_hrg_poisson(params: &HrgParams, seed: u64) -> HrgPointSet {
    sample_hrg_poisson_with_mean(params, params.n() as f64, seed)
}

/// Poissonized HRG on the disk of `params` with an explicit intensity.
pub fn sample_hrg_poisson_with_mean(params: &HrgParams, mean: f64, seed: u64) -> HrgPointSet {
    let count = if mean > 0.0 {
        let mut counter = rng::stream(seed, streams::POISSON_COUNT);
        Poisson::new(mean)
            .expect("positive finite mean")
            .sample(&mut counter) as usize
    } else {
        0
    };
    let mut rng = rng::stream(seed, streams::POSITIONS);
    HrgPointSet {
        params: *params,
        points: draw_points(&mut rng, count, params),
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::radial_cdf;

    #[test]
    fn deterministic_per_seed() {
        let p = HrgParams::new(500, 0.7, 0.0).unwrap();
        assert_eq!(sample_hrg(&p, 3), sample_hrg(&p, 3));
        assert_ne!(sample_hrg(&p, 3).points, sample_hrg(&p, 4).points);
        let a = sample_hrg(&p, 3);
        assert_eq!(a.len(), 500);
        assert!(a
            .points
            .iter()
            .all(|q| q.radius >= 0.0 && q.radius <= p.radius() && q.angle < TAU));
    }

    #[test]
    fn poisson_zero_mean_is_empty() {
        let p = HrgParams::new(10, 0.7, 0.0).unwrap();
        assert!(sample_hrg_poisson_with_mean(&p, 0.0, 1).is_empty());
    }

    #[test]
    fn ks_statistic_of_radii() {
        let p = HrgParams::new(100_000, 0.75, 0.0).unwrap();
        let mut radii: Vec<f64> = sample_hrg(&p, 11).points.iter().map(|q| q.radius).collect();
        radii.sort_by(f64::total_cmp);
        let n = radii.len() as f64;
        let d = radii
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let f = radial_cdf(r, &p);
                (f - i as f64 / n).max((i + 1) as f64 / n - f)
            })
            .fold(0.0, f64::max);
        // asymptotic Kolmogorov critical value at level 0.001
        let critical = (-(0.001f64 / 2.0).ln() / 2.0).sqrt() / n.sqrt();
        assert!(d < critical, "D = {d}, critical {critical}");
    }

    #[test]
    fn rejects_points_outside_disk() {
        let p = HrgParams::new(10, 0.7, 0.0).unwrap();
        let bad = vec![PolarPoint::new(p.radius() + 1.0, 0.0)];
        assert!(HrgPointSet::new(p, bad, 0).is_err());
    }
}
