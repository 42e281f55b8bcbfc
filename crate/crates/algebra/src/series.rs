use std::sync::Arc;

use crate::poly::Poly;
use crate::rational::RationalFn;
use crate::varset::{same, VarSet};
use crate::AlgebraError;

/// Laurent polynomial truncated at total degree `cap` in the capped variables.
/// `t` never counts towards the cap.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    poly: Poly,
    mask: Vec<bool>,
    cap: i64,
}

impl TruncatedSeries {
    pub fn new(p: &Poly, capped: &[&str], cap: i64) -> Result<TruncatedSeries, AlgebraError> {
        let mask = capped_mask(p.vars(), capped)?;
        Ok(TruncatedSeries { poly: p.truncate(&mask, cap), mask, cap })
    }

    pub fn with_mask(p: &Poly, mask: Vec<bool>, cap: i64) -> TruncatedSeries {
        TruncatedSeries { poly: p.truncate(&mask, cap), mask, cap }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    fn compatible(&self, o: &TruncatedSeries) -> Result<(), AlgebraError> {
        if same(self.poly.vars(), o.poly.vars()) && self.mask == o.mask && self.cap == o.cap {
            Ok(())
        } else {
            Err(AlgebraError::SeriesMismatch)
        }
    }

    pub fn add(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.compatible(o)?;
        Ok(TruncatedSeries { poly: &self.poly + &o.poly, mask: self.mask.clone(), cap: self.cap })
    }

    pub fn sub(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.compatible(o)?;
        Ok(TruncatedSeries { poly: &self.poly - &o.poly, mask: self.mask.clone(), cap: self.cap })
    }

    pub fn mul(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
        self.compatible(o)?;
        Ok(TruncatedSeries::with_mask(&(&self.poly * &o.poly), self.mask.clone(), self.cap))
    }

    pub fn mul_poly(&self, p: &Poly) -> TruncatedSeries {
        TruncatedSeries::with_mask(&(&self.poly * p), self.mask.clone(), self.cap)
    }
}

pub(crate) fn capped_mask(vars: &Arc<VarSet>, capped: &[&str]) -> Result<Vec<bool>, AlgebraError> {
    let mut mask = vec![false; vars.len()];
    for name in capped {
        let i = vars.require(name)?;
        if i == 0 {
            return Err(AlgebraError::CappedT);
        }
        mask[i] = true;
    }
    Ok(mask)
}

/// Inverse of `f` as a series, assuming its capped-degree-0 part is a unit.
fn invert(f: &Poly, mask: &[bool], cap: i64) -> Result<Poly, AlgebraError> {
    let vars = f.vars();
    if f.terms().any(|(e, _)| Poly::masked_degree(e, mask) < 0) {
        return Err(AlgebraError::NotInvertible(f.to_string()));
    }
    let f0 = f.homogeneous_part(mask, 0);
    let (c, e) = match f0.as_monomial() {
        Some((c, e)) if c == &1.into() || c == &(-1).into() => (c.clone(), e.clone()),
        _ => return Err(AlgebraError::NotInvertible(f.to_string())),
    };
    let u_inv = Poly::monomial(vars, c, e.iter().map(|x| -x).collect());
    let rest = f - &f0;
    // 1/f = u^{-1} * sum_j (-u^{-1} rest)^j
    let step = -&(&u_inv * &rest);
    let mut term = Poly::one(vars);
    let mut acc = Poly::one(vars);
    for _ in 0..cap.max(0) {
        term = (&term * &step).truncate(mask, cap);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok((&acc * &u_inv).truncate(mask, cap))
}

/// Expands `f` as a power series in the capped variables up to total degree
/// `cap`.
pub fn series_expand(
    f: &RationalFn,
    capped: &[&str],
    cap: i64,
) -> Result<TruncatedSeries, AlgebraError> {
    let mask = capped_mask(f.vars(), capped)?;
    if f.num().terms().any(|(e, _)| Poly::masked_degree(e, &mask) < 0) {
        return Err(AlgebraError::NotInvertible(f.num().to_string()));
    }
    let mut acc = f.num().truncate(&mask, cap);
    for (g, m) in f.den_factors() {
        let inv = invert(g, &mask, cap)?;
        for _ in 0..*m {
            acc = (&acc * &inv).truncate(&mask, cap);
        }
    }
    Ok(TruncatedSeries { poly: acc, mask, cap })
}
