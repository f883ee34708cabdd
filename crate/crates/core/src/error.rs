use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quadrature did not converge after {evaluations} integrand evaluations")]
    QuadratureDiverged { evaluations: usize },

    #[error("vertex {vertex} has no colour")]
    MissingColour { vertex: usize },

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("anchor vertex {vertex} has radius {radius}, outside the open range (R/2, R)")]
    AnchorOutOfRange { vertex: usize, radius: f64 },

    #[error("clique search exceeded its budget; best clique found has {} vertices", best.len())]
    CliqueBudgetExhausted { best: Vec<u32> },

    #[error("graph with {vertex_count} vertices exceeds the exact clique limit of {limit}")]
    CliqueTooLarge { vertex_count: usize, limit: usize },

    #[error("malformed input at {path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("record grids do not match: {0}")]
    GridMismatch(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
