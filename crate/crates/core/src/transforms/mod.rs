//! Graph surgeries: squeezing 4-faces and inflating 2-paths, the Thomassen
//! operation, the four-graph join, vertex insertion and edge contraction.

mod compose;
mod faces;

use thiserror::Error;

use crate::plane::PlaneError;

pub use compose::{contract_edges, insert_into, insert_into_plane, join4_hypotraceable, join4_plane, Insertion};
pub use faces::{
    deflate_4face, deflate_any, enumerate_inflations, inflate_2path, thomassen, InflationSite, MergePair,
    ThomassenResult,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("face {0} is not a 4-face")]
    NotAFourFace(usize),
    #[error("face {0} is not bounded by four distinct edges")]
    DegenerateFace(usize),
    #[error("merging vertices {0} and {1} would create a loop")]
    MergeCreatesLoop(usize, usize),
    #[error("invalid inflation site: {0}")]
    InvalidSite(String),
    #[error("face {0} is not a 4-cycle of cubic vertices")]
    NotCubicFace(usize),
    #[error("vertex {0} is not cubic")]
    NotCubic(usize),
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error(transparent)]
    Plane(#[from] PlaneError),
}
