use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Algebra(#[from] llt_algebra::AlgebraError),
    #[error(transparent)]
    Shape(#[from] llt_shapes::ShapeError),
    #[error(transparent)]
    Tableau(#[from] llt_tableaux::TableauError),
    #[error(transparent)]
    Lattice(#[from] llt_lattice::LatticeError),
    #[error("not a horizontal strip: {0}")]
    NotStrip(String),
    #[error("{0}")]
    Invalid(String),
}
