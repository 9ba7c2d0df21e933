//! Graph interchange: the binary planar_code format, a rotation text
//! format and witness listings.

mod planar_code;
mod text;

use thiserror::Error;

use crate::plane::PlaneError;

pub use planar_code::{
    encode_record, read_planar_code, read_planar_code_lists, write_planar_code, write_planar_code_lists,
    PLANAR_CODE_HEADER,
};
pub use text::{read_rotation_text, read_rotation_text_lists, write_lists_text, write_rotation_text, write_witnesses};

/// Clockwise neighbor lists, one per vertex, 0-based.
pub type RotationLists = Vec<Vec<usize>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("malformed planar_code record at byte {offset}: {reason}")]
    MalformedRecord { offset: usize, reason: String },
    #[error("order {0} is not supported by single-byte planar_code")]
    UnsupportedOrder(usize),
    #[error("rotation text line {line}: {reason}")]
    MalformedText { line: usize, reason: String },
    #[error("graph {index}: {source}")]
    Plane {
        index: usize,
        #[source]
        source: PlaneError,
    },
}

fn lists_to_graphs(lists: Vec<RotationLists>) -> Result<Vec<crate::PlaneGraph>, IoError> {
    lists
        .iter()
        .enumerate()
        .map(|(index, l)| crate::build_plane_graph(l).map_err(|source| IoError::Plane { index, source }))
        .collect()
}
