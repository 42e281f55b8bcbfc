//! Partitions with explicit part counts, tuples of skew shapes, Maya
//! diagrams and the `k`-quotient map.
//!
//! Rows are numbered from 1 with row 1 the longest (drawn at the bottom);
//! a cell in row `r`, column `c` has content `c - r`.

mod maya;
mod parse;
mod partition;
mod tuple;

use thiserror::Error;

pub use maya::{
    aligned_k_quotient, charged_quotient, deinterleave, from_maya, from_quotient, interleave,
    k_quotient, maya, skew_k_quotient, ChargedQuotient, MayaDiagram, Step,
};
pub use parse::{parse_partition, parse_skew_partition, parse_skew_tuple, parse_tuple};
pub use partition::{
    is_horizontal_strip, is_vertical_strip, partitions_in_box, partitions_of, Partition,
};
pub use tuple::{
    complement, conjugate_tuple, strip_extensions, tuples_in_box, Cell, SkewTuple, StripBounds,
    StripKind, TupleDisplay,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("{have} nonzero parts do not fit in {want}")]
    TooManyParts { have: usize, want: usize },
    #[error("Maya diagram needs length {need}, got {got}")]
    MayaTooShort { need: usize, got: usize },
    #[error("tuples of different length: {0} and {1}")]
    TupleArity(usize, usize),
    #[error("components must share one part count")]
    PartCount,
    #[error("inner shape is not contained in outer shape")]
    NotContained,
    #[error("partition does not fit in the box")]
    BoxTooSmall,
    #[error("quotient components of outer and inner shape have different charges")]
    ChargeMismatch,
    #[error("k must be positive")]
    ZeroK,
    #[error("cannot parse shape `{0}`")]
    Parse(String),
}
