//! Colored vertex models: the five weight families, row lattices built from
//! them, partition functions, and the maps relating lattice configurations
//! to tableaux.

mod edge;
mod psi;
mod spec;
mod stats;
mod theta;
mod transfer;
mod weights;

use thiserror::Error;

pub use edge::EdgeState;
pub use psi::{psi, psi_spec};
pub use spec::{boundary_decode, boundary_encode, LatticeSpec, Row};
pub use stats::{box_statistic, coinv_stats, face_spin, spin_count};
pub use theta::{config_to_tableau, quotient_lattice, tableau_to_config, theta, theta_inverse};
pub use transfer::{config_exponents, config_weight, configurations, is_valid, partition_function, LatticeConfig};
pub use weights::{algebraic, face_moves, face_weight, graphical, one_color, Labels, RowKind, VertexKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Algebra(#[from] llt_algebra::AlgebraError),
    #[error(transparent)]
    Shape(#[from] llt_shapes::ShapeError),
    #[error(transparent)]
    Tableau(#[from] llt_tableaux::TableauError),
    #[error("column {column} outside {cmin}..={cmax}")]
    ColumnRange { column: i32, cmin: i32, cmax: i32 },
    #[error("bad boundary: {0}")]
    Boundary(String),
}
