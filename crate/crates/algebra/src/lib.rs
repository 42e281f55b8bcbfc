//! Exact arithmetic for the LLT crates: Laurent polynomials with big integer
//! coefficients over a named variable set, rational functions, and truncated
//! power series.
//!
//! Variable `t` always sits at index 0 of a [`VarSet`].

mod poly;
mod rational;
mod series;
mod varset;

use std::sync::Arc;

use thiserror::Error;

pub use num_bigint::BigInt;
pub use poly::{canonical_cmp, Exps, JsonTerm, Poly};
pub use rational::{substitute, RationalFn};
pub use series::{series_expand, TruncatedSeries};
pub use varset::VarSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live over different variable sets")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    BadVariable(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("`{0}` is not invertible here")]
    NotInvertible(String),
    #[error("t cannot be a capped variable")]
    CappedT,
    #[error("series with different caps or variables")]
    SeriesMismatch,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// `(x; t)_n = (1 - x)(1 - x t) ... (1 - x t^{n-1})`.
pub fn pochhammer(x: &RationalFn, n: u32) -> RationalFn {
    let vars = x.vars().clone();
    let one = RationalFn::one(&vars);
    let mut out = one.clone();
    for m in 0..n {
        let tm = RationalFn::from_poly(Poly::t_pow(&vars, m as i32));
        out = &out * &(&one - &(x * &tm));
    }
    out
}

/// Polynomial version of [`pochhammer`] for Laurent arguments.
pub fn pochhammer_poly(x: &Poly, n: u32) -> Poly {
    let vars = x.vars().clone();
    let one = Poly::one(&vars);
    let mut out = one.clone();
    for m in 0..n {
        out = &out * &(&one - &(x * &Poly::t_pow(&vars, m as i32)));
    }
    out
}

/// `phi(I, J) = sum over i < j of I_i J_j`.
pub fn phi(i: &[i32], j: &[i32]) -> Result<i64, AlgebraError> {
    if i.len() != j.len() {
        return Err(AlgebraError::LengthMismatch(i.len(), j.len()));
    }
    let mut total = 0i64;
    let mut prefix = 0i64;
    for (a, b) in i.iter().zip(j) {
        total += prefix * *b as i64;
        prefix += *a as i64;
    }
    Ok(total)
}

/// Variable set helper used across the workspace.
pub fn vars(names: &[&str]) -> Arc<VarSet> {
    VarSet::new(names).expect("valid variable names")
}
