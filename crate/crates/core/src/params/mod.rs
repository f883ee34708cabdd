//! Exact graph parameters and the geometric witnesses that bound them.

mod clique;
mod colouring;
mod degeneracy;
mod embedding;
mod separator;

pub use clique::{exact_clique, extend_core_clique, is_clique, CliqueBudget};
pub use colouring::{colour_count, greedy_colour, validate_colouring};
pub use degeneracy::{degeneracy, DegeneracyResult};
pub use embedding::{core, inner_degrees, Embedding, InnerDegreeProfile};
pub use separator::{nearest_radius_vertex, separator_partition, SeparatorPartition};
