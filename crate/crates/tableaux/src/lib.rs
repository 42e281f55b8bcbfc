//! Tableaux on tuples of skew shapes and ribbon tableaux.
//!
//! Labels come from `1 < ... < n < 1' < ... < m'`. Unprimed entries grow
//! strictly up columns, primed ones strictly along rows.

mod label;
mod littlewood;
mod render;
mod ribbon;
mod srt;
mod tableau;
mod triples;

use thiserror::Error;

pub use label::{alphabet, SuperLabel};
pub use littlewood::{littlewood_inverse, littlewood_map, ribbon_cells};
pub use render::{render_tableau, render_tuple};
pub use ribbon::{content, enum_hrs, enum_vrs, head_on_south, ribbon_tilings, tail_on_west, Ribbon};
pub use srt::{enum_srt, super_ribbon_g, RibbonTableau};
pub use tableau::{enum_sssyt, visit_sssyt, SuperTableau};
pub use triples::{coinv, coinv_llt, count_triples, inv, inv_llt, triples, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] llt_shapes::ShapeError),
    #[error(transparent)]
    Algebra(#[from] llt_algebra::AlgebraError),
    #[error("bad label `{0}`")]
    BadLabel(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("invalid ribbon tableau: {0}")]
    InvalidRibbons(String),
    #[error("no ribbon strip fills the required shape")]
    NotTileable,
}
