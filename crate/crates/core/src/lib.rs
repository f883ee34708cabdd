//! Sampling and exact parameter analysis for threshold hyperbolic random
//! graphs (HRGs) and standard geometric inhomogeneous random graphs (GIRGs).
//!
//! The crate is split along the lines of a small laboratory:
//!
//! - [`geometry`]: hyperbolic distances, connection angles, measures of balls
//!   and inner-balls, and the closed-form leading constants relating
//!   degeneracy, clique number and core size.
//! - [`samplers`]: reproducible point-set generation and edge construction.
//! - [`params`]: degeneracy, greedy colouring, cores, inner-degrees, exact and
//!   greedy cliques, and hypercycle separators.
//! - [`experiments`]: parameter sweeps, CSV persistence and model comparison.

pub mod error;
pub mod experiments;
pub mod geometry;
pub mod graph;
pub mod params;
pub mod rng;
pub mod samplers;

pub use error::{Error, Result};
pub use geometry::{GirgParams, HrgParams, PolarPoint};
pub use graph::Graph;
