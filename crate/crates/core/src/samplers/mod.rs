//! Reproducible generation of HRG and GIRG instances.

mod coords;
mod edges;
mod girg;
mod hrg;

pub use edges::{build_edges_naive, build_edges_sweep, build_edges_sweep_with_stats, SweepStats};
pub use girg::{
    build_girg_edges, build_girg_edges_naive, girg_inner_prob, girg_torus_distance, sample_girg,
    sample_girg_points, GirgPointSet,
};
pub use hrg::{sample_hrg, sample_hrg_poisson, sample_hrg_poisson_with_mean, HrgPointSet};
