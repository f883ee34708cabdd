//! HRG edge construction.
//!
//! The canonical edge predicate is the angular test `Δφ ≤ θ_R(r_u, r_v)`.
//! The naive builder uses the distance test and defers to the angular test
//! only inside a relative 1e-9 band around the threshold.

use std::f64::consts::{LN_2, PI, TAU};

use log::debug;

use super::HrgPointSet;
use crate::geometry::{connection_angle_trig, hrg_adjacent, RadialTrig};
use crate::graph::Graph;

/// Below this many vertices the sweep builder defers to the naive one.
const NAIVE_CUTOFF: usize = 1 << 10;

const GUARD_BAND: f64 = 1e-9;

/// Work done by the sweep builder.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    /// Pairs that reached the exact connection test.
    pub candidates: u64,
    pub edges: u64,
}

impl SweepStats {
    pub fn candidates_per_edge(&self) -> f64 {
        self.candidates as f64 / self.edges.max(1) as f64
    }
}

/// Exact threshold graph by testing all pairs.
pub fn build_edges_naive(points: &HrgPointSet) -> Graph {
    let n = points.len();
    let disk = RadialTrig::new(points.params.radius());
    let trig: Vec<RadialTrig> = points
        .points
        .iter()
        .map(|p| RadialTrig::new(p.radius))
        .collect();
    let mut pairs = Vec::new();
    for u in 0..n {
        let (tu, pu) = (&trig[u], &points.points[u]);
        for v in u + 1..n {
            let (tv, pv) = (&trig[v], &points.points[v]);
            let lhs = tu.cosh * tv.cosh;
            let cosh_d = lhs - tu.sinh * tv.sinh * (pu.angle - pv.angle).cos();
            let adjacent = if (cosh_d - disk.cosh).abs() <= GUARD_BAND * lhs.max(disk.cosh) {
                let angular = hrg_adjacent(tu, pu.angle, tv, pv.angle, &disk);
                if angular != (cosh_d <= disk.cosh) {
                    debug!("pair ({u}, {v}) within the threshold guard band; using angular test");
                }
                angular
            } else {
                cosh_d <= disk.cosh
            };
            if adjacent {
                pairs.push((u as u32, v as u32));
            }
        }
    }
    Graph::from_unique_pairs(n, &pairs)
}

/// Same edge set as [`build_edges_naive`], in expected near-linear time.
pub fn build_edges_sweep(points: &HrgPointSet) -> Graph {
    build_edges_sweep_with_stats(points).0
}

struct Band {
    /// Inner radius; `0` for the core band, which connects to everything.
    inner: RadialTrig,
    /// `(angle, vertex)` sorted by angle.
    members: Vec<(f64, u32)>,
}

/// Sweep builder that also reports how many candidate pairs it tested.
///
/// Vertices are grouped into the core band `[0, R/2)` and radial bands of
/// width `ln 2` above it, each sorted by angle. A vertex at radius `r`
/// only inspects, in each band at or beyond its own, the angular window
/// `θ_R(r, inner radius of the band)`, which bounds the connection angle to
/// every member of that band.
pub fn build_edges_sweep_with_stats(points: &HrgPointSet) -> (Graph, SweepStats) {
    let n = points.len();
    if n <= NAIVE_CUTOFF {
        let g = build_edges_naive(points);
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        let edges = g.edge_count() as u64;
        return (
            g,
            SweepStats {
                candidates: pairs,
                edges,
            },
        );
    }
    let big_r = points.params.radius();
    let half = big_r / 2.0;
    let disk = RadialTrig::new(big_r);
    let band_count = 2 + ((big_r - half) / LN_2).floor() as usize;
    let band_of = |r: f64| -> usize {
        if r < half {
            0
        } else {
            (1 + ((r - half) / LN_2) as usize).min(band_count - 1)
        }
    };
    let mut bands: Vec<Band> = (0..band_count)
        .map(|b| Band {
            inner: RadialTrig::new(if b == 0 {
                0.0
            } else {
                half + (b - 1) as f64 * LN_2
            }),
            members: Vec::new(),
        })
        .collect();
    let trig: Vec<RadialTrig> = points
        .points
        .iter()
        .map(|p| RadialTrig::new(p.radius))
        .collect();
    let mut band_index = Vec::with_capacity(n);
    for (v, p) in points.points.iter().enumerate() {
        let b = band_of(p.radius);
        band_index.push(b);
        bands[b].members.push((p.angle, v as u32));
    }
    for band in &mut bands {
        band.members
            .sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    }

    let mut stats = SweepStats::default();
    let mut pairs = Vec::new();
    for u in 0..n {
        let (tu, phi) = (&trig[u], points.points[u].angle);
        let home = band_index[u];
        for (b, band) in bands.iter().enumerate().skip(home) {
            if band.members.is_empty() {
                continue;
            }
            let window = if tu.radius == 0.0 || band.inner.radius == 0.0 {
                PI
            } else {
                connection_angle_trig(tu, &band.inner, &disk)
            };
            let mut visit = |slice: &[(f64, u32)]| {
                for &(angle, v) in slice {
                    if b == home && v as usize <= u {
                        continue;
                    }
                    stats.candidates += 1;
                    if hrg_adjacent(tu, phi, &trig[v as usize], angle, &disk) {
                        pairs.push((u.min(v as usize) as u32, u.max(v as usize) as u32));
                    }
                }
            };
            // slack absorbs rounding in the window; the exact test decides
            let w = window + 1e-12;
            if w >= PI {
                visit(&band.members);
                continue;
            }
            let (lo, hi) = (phi - w, phi + w);
            let m = &band.members;
            let lower = |x: f64| m.partition_point(|e| e.0 < x);
            let upper = |x: f64| m.partition_point(|e| e.0 <= x);
            if lo < 0.0 {
                visit(&m[lower(lo + TAU)..]);
                visit(&m[..upper(hi)]);
            } else if hi >= TAU {
                visit(&m[lower(lo)..]);
                visit(&m[..upper(hi - TAU)]);
            } else {
                visit(&m[lower(lo)..upper(hi)]);
            }
        }
    }
    stats.edges = pairs.len() as u64;
    (Graph::from_unique_pairs(n, &pairs), stats)
}
