use std::path::Path;

use rand::Rng;

use super::coords;
use crate::error::{Error, Result};
use crate::geometry::GirgParams;
use crate::graph::Graph;
use crate::rng::{self, streams};

/// Weights and torus positions of one GIRG instance.
#[derive(Debug, Clone, PartialEq)]
pub struct GirgPointSet {
    pub params: GirgParams,
    pub weights: Vec<f64>,
    pub positions: Vec<f64>,
    pub seed: u64,
}

impl GirgPointSet {
    pub fn new(
        params: GirgParams,
        weights: Vec<f64>,
        positions: Vec<f64>,
        seed: u64,
    ) -> Result<Self> {
        if weights.len() != positions.len() {
            return Err(Error::invalid("weights and positions differ in length"));
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 1.0 && w.is_finite())) {
            return Err(Error::invalid(format!("weight {w} below 1")));
        }
        if let Some(x) = positions.iter().find(|x| !(0.0..1.0).contains(*x)) {
            return Err(Error::invalid(format!("position {x} outside [0, 1)")));
        }
        Ok(GirgPointSet {
            params,
            weights,
            positions,
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Writes one `id weight position` line per vertex, 17 significant digits.
    pub fn write_coordinates(&self, path: &Path) -> Result<()> {
        coords::write(
            path,
            self.weights
                .iter()
                .copied()
                .zip(self.positions.iter().copied()),
        )
    }

    pub fn read_coordinates(path: &Path, params: GirgParams, seed: u64) -> Result<Self> {
        let (weights, positions) = coords::read(path)?.into_iter().unzip();
        Self::new(params, weights, positions, seed)
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        girg_torus_distance(self.positions[u], self.positions[v])
            <= self.params.threshold(self.weights[u], self.weights[v])
    }
}

/// Distance on the unit circle `R/Z`; never exceeds 1/2.
pub fn girg_torus_distance(x: f64, y: f64) -> f64 {
    let d = (x - y).abs();
    d.min(1.0 - d)
}

/// Samples weights (all first) then positions, and builds the edge set.
pub fn sample_girg(params: &GirgParams, seed: u64) -> (GirgPointSet, Graph) {
    let points = sample_girg_points(params, seed);
    let graph = build_girg_edges(&points);
    (points, graph)
}

/// Weights and positions only.
pub fn sample_girg_points(params: &GirgParams, seed: u64) -> GirgPointSet {
    let mut rng = rng::stream(seed, streams::POSITIONS);
    let n = params.n();
    let exponent = -1.0 / (params.beta() - 1.0);
    let weights: Vec<f64> = (0..n)
        .map(|_| (1.0 - rng.random::<f64>()).powf(exponent))
        .collect();
    let positions: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    GirgPointSet {
        params: *params,
        weights,
        positions,
        seed,
    }
}

/// All-pairs reference construction.
pub fn build_girg_edges_naive(points: &GirgPointSet) -> Graph {
    let n = points.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if points.adjacent(u, v) {
                pairs.push((u as u32, v as u32));
            }
        }
    }
    Graph::from_unique_pairs(n, &pairs)
}

/// Weight-layered construction: vertices are grouped by `⌊log₂ w⌋`, each
/// layer sorted by position; a vertex scans each layer at or above its own
/// within the threshold reached by that layer's largest possible weight.
pub fn build_girg_edges(points: &GirgPointSet) -> Graph {
    let n = points.len();
    let layer_of = |w: f64| w.log2().floor().max(0.0) as usize;
    let layer_count = points
        .weights
        .iter()
        .map(|&w| layer_of(w) + 1)
        .max()
        .unwrap_or(0);
    let mut layers: Vec<Vec<(f64, u32)>> = vec![Vec::new(); layer_count];
    for v in 0..n {
        layers[layer_of(points.weights[v])].push((points.positions[v], v as u32));
    }
    for layer in &mut layers {
        layer.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        let (wu, xu) = (points.weights[u], points.positions[u]);
        let home = layer_of(wu);
        for (l, layer) in layers.iter().enumerate().skip(home) {
            let window = points.params.threshold(wu, (2.0f64).powi(l as i32 + 1));
            let mut visit = |slice: &[(f64, u32)]| {
                for &(_, v) in slice {
                    let v = v as usize;
                    if (l == home && v <= u) || !points.adjacent(u, v) {
                        continue;
                    }
                    pairs.push((u.min(v) as u32, u.max(v) as u32));
                }
            };
            if window >= 0.5 {
                visit(layer);
                continue;
            }
            let (lo, hi) = (xu - window, xu + window);
            let lower = |x: f64| layer.partition_point(|e| e.0 < x);
            let upper = |x: f64| layer.partition_point(|e| e.0 <= x);
            if lo < 0.0 {
                visit(&layer[lower(lo + 1.0)..]);
                visit(&layer[..upper(hi)]);
            } else if hi >= 1.0 {
                visit(&layer[lower(lo)..]);
                visit(&layer[..upper(hi - 1.0)]);
            } else {
                visit(&layer[lower(lo)..upper(hi)]);
            }
        }
    }
    Graph::from_unique_pairs(n, &pairs)
}

/// Probability that a fresh vertex lands in the inner-neighbourhood (is
/// adjacent and at least as heavy) of a vertex of weight `w`.
///
/// Vertices heavier than `n/(wλ)` are adjacent regardless of position. Once
/// `w` exceeds the core weight `√(n/λ)` that saturation covers every heavier
/// vertex and the probability is just the Pareto tail `w^{-2α}`.
pub fn girg_inner_prob(w: f64, params: &GirgParams) -> Result<f64> {
    if !w.is_finite() || w < 1.0 {
        return Err(Error::invalid(format!(
            "weight must be at least 1, got {w}"
        )));
    }
    let a = params.alpha();
    let n = params.n() as f64;
    let lambda = params.lambda();
    let saturation = n / (w * lambda);
    if w >= saturation {
        return Ok(w.powf(-2.0 * a));
    }
    let tail = saturation.powf(-2.0 * a);
    Ok(tail + a / (a - 0.5) * (lambda * w.powf(2.0 * (1.0 - a)) / n - tail))
}
