use std::sync::Arc;

use llt_algebra::{Poly, VarSet};
use llt_lattice::{partition_function, LatticeSpec, Row};
use llt_shapes::SkewTuple;

use crate::IdentityError;

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Lattice polynomial of `shape` with white rows in `whites` below purple
/// rows in `purples`, bottom to top.
pub fn lattice_poly(
    shape: &SkewTuple,
    whites: &[String],
    purples: &[String],
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    let rows = whites
        .iter()
        .map(|v| Row::white(v.clone()))
        .chain(purples.iter().map(|v| Row::purple(v.clone())))
        .collect();
    Ok(partition_function(&LatticeSpec::for_shape(shape, rows)?, vars)?)
}

/// The coinversion LLT polynomial in the named variables.
pub fn llt(shape: &SkewTuple, xs: &[String], vars: &Arc<VarSet>) -> Result<Poly, IdentityError> {
    lattice_poly(shape, xs, &[], vars)
}

/// The purple lattice polynomial in the named variables.
pub fn llt_purple(shape: &SkewTuple, xs: &[String], vars: &Arc<VarSet>) -> Result<Poly, IdentityError> {
    lattice_poly(shape, &[], xs, vars)
}

pub fn llt_super(
    shape: &SkewTuple,
    xs: &[String],
    ys: &[String],
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    lattice_poly(shape, xs, ys, vars)
}

/// `p(t^-1)`.
pub fn invert_t(p: &Poly) -> Result<Poly, IdentityError> {
    Ok(p.subs("t", &Poly::t_pow(p.vars(), -1))?)
}

pub fn t_pow(vars: &Arc<VarSet>, e: i64) -> Poly {
    Poly::t_pow(vars, e as i32)
}

pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Poly, IdentityError> {
    Ok(Poly::var(vars, name)?)
}
