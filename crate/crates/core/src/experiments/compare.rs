use std::collections::BTreeMap;

use rand::Rng;

use super::record::ExperimentRecord;
use crate::error::{Error, Result};
use crate::rng::{self, cell_seed, streams};

const BOOTSTRAP_RESAMPLES: usize = 2000;

/// GIRG-minus-HRG difference of median `κ/σ` at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelGap {
    pub n: usize,
    pub alpha: f64,
    pub hrg_median: f64,
    pub girg_median: f64,
    pub gap: f64,
    /// Bootstrap 95% percentile interval of the gap.
    pub ci_low: f64,
    pub ci_high: f64,
    pub hrg_samples: usize,
    pub girg_samples: usize,
}

/// Median of a non-empty slice; the mean of the two middle values for even
/// lengths.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of an empty sample");
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

type Grid = BTreeMap<(usize, u64), Vec<f64>>;

fn grid(records: &[ExperimentRecord]) -> Grid {
    let mut grid = Grid::new();
    for r in records {
        let entry = grid.entry((r.n, r.alpha.to_bits())).or_default();
        if let Some(x) = r.kappa_over_sigma() {
            entry.push(x);
        }
    }
    grid
}

fn resample<R: Rng>(rng: &mut R, sample: &[f64], scratch: &mut Vec<f64>) -> f64 {
    scratch.clear();
    scratch.extend((0..sample.len()).map(|_| sample[rng.random_range(0..sample.len())]));
    median(scratch)
}

fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Per `(n, α)` gap between the models' median `κ/σ`, over rows that have
/// a degeneracy and a non-empty core. Both inputs must cover the same grid.
pub fn compare_models(
    hrg: &[ExperimentRecord],
    girg: &[ExperimentRecord],
) -> Result<Vec<ModelGap>> {
    let (hrg, girg) = (grid(hrg), grid(girg));
    if !hrg.keys().eq(girg.keys()) {
        let show = |g: &Grid| {
            g.keys()
                .map(|&(n, a)| format!("({n}, {})", f64::from_bits(a)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(Error::GridMismatch(format!(
            "hrg grid [{}] vs girg grid [{}]",
            show(&hrg),
            show(&girg)
        )));
    }
    let mut gaps = Vec::new();
    for ((key, h), g) in hrg.iter().zip(girg.values()) {
        let (n, alpha) = (key.0, f64::from_bits(key.1));
        if h.is_empty() || g.is_empty() {
            return Err(Error::GridMismatch(format!(
                "no usable kappa/sigma values at n = {n}, alpha = {alpha}"
            )));
        }
        let (hrg_median, girg_median) = (median(h), median(g));
        let mut rng = rng::stream(cell_seed(0, 0, n as u64, alpha, 0), streams::BOOTSTRAP);
        let mut scratch = Vec::new();
        let mut diffs: Vec<f64> = (0..BOOTSTRAP_RESAMPLES)
            .map(|_| resample(&mut rng, g, &mut scratch) - resample(&mut rng, h, &mut scratch))
            .collect();
        diffs.sort_by(f64::total_cmp);
        gaps.push(ModelGap {
            n,
            alpha,
            hrg_median,
            girg_median,
            gap: girg_median - hrg_median,
            ci_low: percentile(&diffs, 0.025),
            ci_high: percentile(&diffs, 0.975),
            hrg_samples: h.len(),
            girg_samples: g.len(),
        });
    }
    Ok(gaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{ExperimentRecord, Model};
    use crate::geometry::theory_bounds;

    fn rec(
        model: Model,
        n: usize,
        alpha: f64,
        seed: u64,
        kappa: usize,
        sigma: usize,
    ) -> ExperimentRecord {
        let mut r =
            ExperimentRecord::blank(model, n, alpha, 1.0, seed, theory_bounds(alpha).unwrap());
        r.kappa = Some(kappa);
        r.sigma = sigma;
        r
    }

    #[test]
    fn median_odd_and_even() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn identical_inputs_give_zero_gap() {
        let rs: Vec<_> = (0..7)
            .map(|s| rec(Model::Hrg, 100, 0.7, s, 10 + s as usize, 9))
            .collect();
        let gaps = compare_models(&rs, &rs).unwrap();
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].gap, 0.0);
        assert!(gaps[0].ci_low <= 0.0 && gaps[0].ci_high >= 0.0);
    }

    #[test]
    fn grid_mismatch_rejected() {
        let h = vec![rec(Model::Hrg, 100, 0.7, 1, 10, 9)];
        let g = vec![rec(Model::Girg, 100, 0.8, 1, 10, 9)];
        assert!(matches!(
            compare_models(&h, &g),
            Err(Error::GridMismatch(_))
        ));
    }

    #[test]
    fn gap_sign_follows_medians() {
        let h: Vec<_> = (0..5)
            .map(|s| rec(Model::Hrg, 100, 0.6, s, 11, 10))
            .collect();
        let g: Vec<_> = (0..5)
            .map(|s| rec(Model::Girg, 100, 0.6, s, 13, 10))
            .collect();
        let gap = &compare_models(&h, &g).unwrap()[0];
        assert!((gap.gap - 0.2).abs() < 1e-12);
        assert!(gap.ci_low > 0.0);
    }
}
