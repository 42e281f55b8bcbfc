use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::varset::{same, VarSet};
use crate::AlgebraError;

pub type Exps = Vec<i32>;

/// Multivariate Laurent polynomial with integer coefficients.
#[derive(Clone)]
pub struct Poly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Exps, BigInt>,
}

/// One term of the JSON form. Exponents are keyed by variable name and zero
/// exponents are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, i32>,
}

/// Printing order: larger non-`t` degree first, then lex on the non-`t`
/// variables in declaration order, then larger `t` exponent first.
pub fn canonical_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a[1..].iter().map(|&e| e as i64).sum();
    let db: i64 = b[1..].iter().map(|&e| e as i64).sum();
    db.cmp(&da)
        .then_with(|| b[1..].cmp(&a[1..]))
        .then_with(|| b[0].cmp(&a[0]))
}

/// Graded lex including every variable; the monomial order used by division.
fn division_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a[1..].cmp(&b[1..])).then_with(|| a[0].cmp(&b[0]))
}

impl Poly {
    pub fn zero(vars: &Arc<VarSet>) -> Poly {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarSet>) -> Poly {
        Poly::constant(vars, 1)
    }

    pub fn constant<C: Into<BigInt>>(vars: &Arc<VarSet>, c: C) -> Poly {
        Poly::monomial(vars, c, vec![0; vars.len()])
    }

    pub fn monomial<C: Into<BigInt>>(vars: &Arc<VarSet>, c: C, exps: Exps) -> Poly {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    /// The variable `name` to the power `e`.
    pub fn var_pow(vars: &Arc<VarSet>, name: &str, e: i32) -> Result<Poly, AlgebraError> {
        let i = vars.require(name)?;
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        Ok(Poly::monomial(vars, 1, exps))
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Poly, AlgebraError> {
        Poly::var_pow(vars, name, 1)
    }

    /// `t^e`.
    pub fn t_pow(vars: &Arc<VarSet>, e: i32) -> Poly {
        let mut exps = vec![0; vars.len()];
        exps[0] = e;
        Poly::monomial(vars, 1, exps)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, BigInt)>>(vars: &Arc<VarSet>, it: I) -> Poly {
        let mut p = Poly::zero(vars);
        for (e, c) in it {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical printing order.
    pub fn sorted_terms(&self) -> Vec<(&Exps, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    /// A fixed total order on term maps, used to sort factor lists.
    pub fn cmp_terms(&self, other: &Poly) -> Ordering {
        self.terms.cmp(&other.terms)
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// In-place `self += c * x^e`.
    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        assert_eq!(e.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Poly) -> Result<(), AlgebraError> {
        if same(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(AlgebraError::VarSetMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check(other)?;
        let mut out = Poly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other * c * x^shift`.
    pub fn add_scaled_shifted(&mut self, other: &Poly, c: i64, shift: &[i32]) {
        assert!(same(&self.vars, &other.vars), "variable set mismatch");
        if c == 0 {
            return;
        }
        let c = BigInt::from(c);
        for (e, ce) in &other.terms {
            let ne: Exps = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(ne, ce * &c);
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Poly {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * &c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// `Some((c, e))` when the polynomial is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, &Exps)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    /// A unit of the Laurent ring: `±x^e`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    /// Componentwise minimum exponent over all terms (zero vector for 0).
    pub fn min_exps(&self) -> Exps {
        let mut m: Option<Exps> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    pub fn max_exps(&self) -> Exps {
        let mut m: Option<Exps> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.vars.len()])
    }

    /// Leading term under the division order.
    fn leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().max_by(|a, b| division_cmp(a.0, b.0))
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Poly> {
        let mut out = Poly::zero(&self.vars);
        for (e, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.terms.insert(e.clone(), q);
        }
        Some(out)
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(same(&self.vars, &d.vars), "variable set mismatch");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero(&self.vars));
        }
        let sa = self.min_exps();
        let sd = d.min_exps();
        let neg = |v: &Exps| v.iter().map(|x| -x).collect::<Exps>();
        let mut rem = self.shift(&neg(&sa));
        let dd = d.shift(&neg(&sd));
        let (lde, ldc) = {
            let (e, c) = dd.leading().expect("nonzero");
            (e.clone(), c.clone())
        };
        let mut quot = Poly::zero(&self.vars);
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exps = re.iter().zip(&lde).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            let mut sub = dd.shift(&qe);
            sub = sub.scale(qc.clone());
            rem = &rem - &sub;
            quot.add_term(qe, qc);
        }
        let back: Exps = sa.iter().zip(&sd).map(|(a, b)| a - b).collect();
        Some(quot.shift(&back))
    }

    /// Unit-normal form: divide out the minimum monomial and make the leading
    /// coefficient positive. Returns `(normal, sign, monomial)` with
    /// `self = sign * x^monomial * normal`.
    pub fn unit_normal(&self) -> (Poly, i32, Exps) {
        let m = self.min_exps();
        let neg: Exps = m.iter().map(|x| -x).collect();
        let p = self.shift(&neg);
        let sign = match p.leading() {
            Some((_, c)) if c.is_negative() => -1,
            _ => 1,
        };
        let p = if sign < 0 { -&p } else { p };
        (p, sign, m)
    }

    /// Degree in variable `i` over all terms: `(min, max)`.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut r: Option<(i32, i32)> = None;
        for e in self.terms.keys() {
            r = Some(match r {
                None => (e[i], e[i]),
                Some((lo, hi)) => (lo.min(e[i]), hi.max(e[i])),
            });
        }
        r
    }

    /// Total degree of each term restricted to variables flagged in `mask`.
    pub fn masked_degree(exps: &[i32], mask: &[bool]) -> i64 {
        exps.iter().zip(mask).filter(|(_, &m)| m).map(|(&e, _)| e as i64).sum()
    }

    /// Drops every term whose masked degree exceeds `cap`.
    pub fn truncate(&self, mask: &[bool], cap: i64) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Poly::masked_degree(e, mask) <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only terms whose masked degree equals `d`.
    pub fn homogeneous_part(&self, mask: &[bool], d: i64) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Poly::masked_degree(e, mask) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `var^e` viewing `self` as a Laurent polynomial in `var`.
    pub fn coefficient_in(&self, var: usize, e: i32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(x, _)| x[var] == e)
                .map(|(x, c)| {
                    let mut x = x.clone();
                    x[var] = 0;
                    (x, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `var := value`. Negative powers of `var` require `value`
    /// to be a unit; otherwise an error is returned.
    pub fn subs(&self, var: &str, value: &Poly) -> Result<Poly, AlgebraError> {
        self.check(value)?;
        let i = self.vars.require(var)?;
        let (lo, hi) = match self.degree_range(i) {
            None => return Ok(self.clone()),
            Some(r) => r,
        };
        let inverse = if lo < 0 {
            match value.as_monomial() {
                Some((c, e)) if c.abs().is_one() => {
                    Some(Poly::monomial(&self.vars, c.clone(), e.iter().map(|x| -x).collect()))
                }
                _ => return Err(AlgebraError::NotInvertible(value.to_string())),
            }
        } else {
            None
        };
        let mut out = Poly::zero(&self.vars);
        for e in lo..=hi {
            let c = self.coefficient_in(i, e);
            if c.is_zero() {
                continue;
            }
            let f = if e >= 0 {
                value.pow(e as u32)
            } else {
                inverse.as_ref().expect("checked").pow((-e) as u32)
            };
            out = &out + &(&c * &f);
        }
        Ok(out)
    }

    /// Renames variables into another variable set. `map[i]` gives the target
    /// index of source variable `i`; unmapped variables must not occur.
    pub fn rename(&self, target: &Arc<VarSet>, map: &[Option<usize>]) -> Result<Poly, AlgebraError> {
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] += x,
                    None => {
                        return Err(AlgebraError::UnknownVariable(self.vars.name(i).to_string()))
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<VarSet>) -> Result<Poly, AlgebraError> {
        let map: Vec<Option<usize>> =
            self.vars.names().iter().map(|n| target.index(n)).collect();
        self.rename(target, &map)
    }

    /// Swaps pairs of variables by name, e.g. `x1<->y1`.
    pub fn swap_vars(&self, pairs: &[(&str, &str)]) -> Result<Poly, AlgebraError> {
        let mut map: Vec<Option<usize>> = (0..self.vars.len()).map(Some).collect();
        for (a, b) in pairs {
            let ia = self.vars.require(a)?;
            let ib = self.vars.require(b)?;
            map[ia] = Some(ib);
            map[ib] = Some(ia);
        }
        self.rename(&self.vars.clone(), &map)
    }

    pub fn to_json(&self) -> Vec<JsonTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| JsonTerm {
                coeff: c.to_string(),
                exps: e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| (self.vars.name(i).to_string(), x))
                    .collect(),
            })
            .collect()
    }

    pub fn from_json(vars: &Arc<VarSet>, terms: &[JsonTerm]) -> Result<Poly, AlgebraError> {
        let mut p = Poly::zero(vars);
        for t in terms {
            let c: BigInt =
                t.coeff.parse().map_err(|_| AlgebraError::Parse(t.coeff.clone()))?;
            let mut e = vec![0; vars.len()];
            for (name, &x) in &t.exps {
                e[vars.require(name)?] += x;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parses the canonical text form, e.g. `t*x1^3 - 2*x1*y1^-1 + 5`.
    pub fn parse(vars: &Arc<VarSet>, s: &str) -> Result<Poly, AlgebraError> {
        let err = || AlgebraError::Parse(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(err());
        }
        // split into signed terms; a sign directly after '^' belongs to the exponent
        let bytes = cleaned.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'(' {
                pieces.push(&cleaned[start..i]);
                start = i;
            }
        }
        pieces.push(&cleaned[start..]);
        let mut p = Poly::zero(vars);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(err());
            }
            let mut coeff = BigInt::from(sign);
            let mut exps = vec![0; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(err());
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| err())?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e = e.trim_start_matches('(').trim_end_matches(')');
                        (n, e.parse::<i32>().map_err(|_| err())?)
                    }
                    None => (factor, 1),
                };
                exps[vars.require(name)?] += e;
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        same(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn fmt_monomial(vars: &VarSet, e: &[i32]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), x)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = fmt_monomial(&self.vars, e);
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.checked_add(o).expect("variable set mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.checked_sub(o).expect("variable set mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.checked_mul(o).expect("variable set mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
