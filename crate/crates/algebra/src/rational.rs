use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::poly::Poly;
use crate::varset::{same, VarSet};
use crate::AlgebraError;

/// Quotient `num / (f1^m1 * f2^m2 * ...)` of Laurent polynomials.
///
/// The denominator is kept as a list of unit-normal factors (minimum exponent
/// zero in every variable, positive leading coefficient). Common factors are
/// cancelled by trial division of the numerator by each listed factor; no
/// general gcd is computed, so two equal functions may be stored differently.
/// Equality therefore cross-multiplies.
#[derive(Clone)]
pub struct RationalFn {
    num: Poly,
    den: Vec<(Poly, u32)>,
}

impl RationalFn {
    pub fn from_poly(p: Poly) -> RationalFn {
        RationalFn { num: p, den: Vec::new() }
    }

    pub fn zero(vars: &Arc<VarSet>) -> RationalFn {
        RationalFn::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: &Arc<VarSet>) -> RationalFn {
        RationalFn::from_poly(Poly::one(vars))
    }

    pub fn new(num: Poly, den: Poly) -> Result<RationalFn, AlgebraError> {
        if num.vars() != den.vars() && !same(num.vars(), den.vars()) {
            return Err(AlgebraError::VarSetMismatch);
        }
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut r = RationalFn { num, den: Vec::new() };
        r.push_factor(den, 1);
        r.cancel();
        Ok(r)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.num.vars()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    /// The denominator as a single polynomial.
    pub fn den(&self) -> Poly {
        let mut d = Poly::one(self.vars());
        for (f, m) in &self.den {
            d = &d * &f.pow(*m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value if the denominator is trivial.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.den.is_empty() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    fn push_factor(&mut self, f: Poly, m: u32) {
        let (n, sign, mono) = f.unit_normal();
        // absorb the unit part of f into the numerator
        let inv: Vec<i32> = mono.iter().map(|x| -x).collect();
        let mut num = self.num.shift(&inv);
        for _ in 0..m {
            if sign < 0 {
                num = -&num;
            }
        }
        if m > 1 {
            let extra: Vec<i32> = inv.iter().map(|x| x * (m as i32 - 1)).collect();
            num = num.shift(&extra);
        }
        self.num = num;
        if n.is_one() {
            return;
        }
        match self.den.iter_mut().find(|(g, _)| *g == n) {
            Some(entry) => entry.1 += m,
            None => self.den.push((n, m)),
        }
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, m) in self.den.iter_mut() {
            while *m > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, m)| *m > 0);
        self.den.sort_by(|a, b| a.0.cmp_terms(&b.0));
    }

    fn check(&self, o: &RationalFn) -> Result<(), AlgebraError> {
        if same(self.vars(), o.vars()) {
            Ok(())
        } else {
            Err(AlgebraError::VarSetMismatch)
        }
    }

    pub fn checked_mul(&self, o: &RationalFn) -> Result<RationalFn, AlgebraError> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(RationalFn::zero(self.vars()));
        }
        let mut r = RationalFn { num: &self.num * &o.num, den: self.den.clone() };
        for (f, m) in &o.den {
            match r.den.iter_mut().find(|(g, _)| g == f) {
                Some(e) => e.1 += m,
                None => r.den.push((f.clone(), *m)),
            }
        }
        r.cancel();
        Ok(r)
    }

    pub fn checked_add(&self, o: &RationalFn) -> Result<RationalFn, AlgebraError> {
        self.check(o)?;
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        // lcm of the two factor lists
        let mut lcm = self.den.clone();
        for (f, m) in &o.den {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some(e) => e.1 = e.1.max(*m),
                None => lcm.push((f.clone(), *m)),
            }
        }
        let cofactor = |den: &[(Poly, u32)]| {
            let mut c = Poly::one(self.vars());
            for (f, m) in &lcm {
                let have = den.iter().find(|(g, _)| g == f).map(|e| e.1).unwrap_or(0);
                if *m > have {
                    c = &c * &f.pow(m - have);
                }
            }
            c
        };
        let num = &(&self.num * &cofactor(&self.den)) + &(&o.num * &cofactor(&o.den));
        let mut r = RationalFn { num, den: lcm };
        r.cancel();
        Ok(r)
    }

    pub fn checked_sub(&self, o: &RationalFn) -> Result<RationalFn, AlgebraError> {
        self.checked_add(&-o)
    }

    pub fn inv(&self) -> Result<RationalFn, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let num = self.den();
        RationalFn::new(num, self.num.clone())
    }

    pub fn checked_div(&self, o: &RationalFn) -> Result<RationalFn, AlgebraError> {
        self.checked_mul(&o.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RationalFn, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = RationalFn::one(self.vars());
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &Poly) -> RationalFn {
        self * &RationalFn::from_poly(p.clone())
    }

    /// Exact equality by cross-multiplication.
    pub fn equals(&self, o: &RationalFn) -> bool {
        if !same(self.vars(), o.vars()) {
            return false;
        }
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den() == &o.num * &self.den()
    }

    /// Substitutes `var := value` into numerator and denominator.
    pub fn substitute(&self, var: &str, value: &RationalFn) -> Result<RationalFn, AlgebraError> {
        let mut out = substitute(&self.num, var, value)?;
        for (f, m) in &self.den {
            let s = substitute(f, var, value)?;
            if s.is_zero() {
                return Err(AlgebraError::ZeroDenominator);
            }
            out = out.checked_div(&s.pow(*m as i32)?)?;
        }
        Ok(out)
    }
}

/// Substitutes `var := value` into a Laurent polynomial.
pub fn substitute(p: &Poly, var: &str, value: &RationalFn) -> Result<RationalFn, AlgebraError> {
    if !same(p.vars(), value.vars()) {
        return Err(AlgebraError::VarSetMismatch);
    }
    let i = p.vars().require(var)?;
    if let Some(v) = value.to_poly() {
        if v.is_unit() || p.degree_range(i).map(|r| r.0 >= 0).unwrap_or(true) {
            return Ok(RationalFn::from_poly(p.subs(var, &v)?));
        }
    }
    let (lo, hi) = match p.degree_range(i) {
        None => return Ok(RationalFn::from_poly(p.clone())),
        Some(r) => r,
    };
    let mut out = RationalFn::zero(p.vars());
    for e in lo..=hi {
        let c = p.coefficient_in(i, e);
        if c.is_zero() {
            continue;
        }
        out = &out + &value.pow(e)?.scale_poly(&c);
    }
    Ok(out)
}

impl PartialEq for RationalFn {
    fn eq(&self, o: &RationalFn) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (k, (p, m)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *m == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{m}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> RationalFn {
        RationalFn::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, o: &RationalFn) -> RationalFn {
        self.checked_add(o).expect("variable set mismatch")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, o: &RationalFn) -> RationalFn {
        self.checked_sub(o).expect("variable set mismatch")
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, o: &RationalFn) -> RationalFn {
        self.checked_mul(o).expect("variable set mismatch")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}
