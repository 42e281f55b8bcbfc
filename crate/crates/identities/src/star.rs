use std::sync::Arc;

use llt_algebra::{Poly, VarSet};
use llt_lattice::{boundary_encode, partition_function, LatticeSpec, Row};
use llt_shapes::{Partition, SkewTuple, TupleDisplay};

use crate::polys::{llt, llt_purple, names, t_pow};
use crate::report::{differ, VerificationReport};
use crate::IdentityError;

/// `sum_{a<b} #{(i, j) : alpha^(a)_j - j > alpha^(b)_i - i}` over `len` parts.
pub fn a_count(alpha: &[Partition], len: usize) -> i64 {
    let mut total = 0;
    for (a, pa) in alpha.iter().enumerate() {
        for pb in &alpha[a + 1..] {
            for j in 1..=len {
                for i in 1..=len {
                    if pa.part(j) as i64 - j as i64 > pb.part(i) as i64 - i as i64 {
                        total += 1;
                    }
                }
            }
        }
    }
    total
}

fn max_len(t: &[Partition]) -> usize {
    t.iter().map(Partition::length).max().unwrap_or(0)
}

fn max_part(t: &[Partition]) -> u32 {
    t.iter().map(Partition::largest).max().unwrap_or(0)
}

fn bounds(ok: bool, what: &str) -> Result<(), IdentityError> {
    if ok {
        Ok(())
    } else {
        Err(IdentityError::Invalid(format!("bounds violated: {what}")))
    }
}

/// Checks `lam` in `P_{l1,l2}` and `mu` in `P_{l1-m,l2}`.
fn gray_bounds(lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> Result<(), IdentityError> {
    bounds(lam.len() == mu.len(), "tuples of different lengths")?;
    bounds(max_len(lam) <= l1 && max_part(lam) <= l2, "lam outside P_{l1,l2}")?;
    bounds(l1 >= m && max_len(mu) <= l1 - m && max_part(mu) <= l2, "mu outside P_{l1-m,l2}")
}

/// Checks `lam` in `P_{l1,l2}` and `mu` in `P_{l1+m,l2-m}`.
fn light_bounds(lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> Result<(), IdentityError> {
    bounds(lam.len() == mu.len(), "tuples of different lengths")?;
    bounds(max_len(lam) <= l1 && max_part(lam) <= l2, "lam outside P_{l1,l2}")?;
    bounds(l2 >= m as u32 && max_len(mu) <= l1 + m && max_part(mu) <= l2 - m as u32, "mu outside P_{l1+m,l2-m}")
}

fn padded(t: &[Partition], len: usize) -> Result<Vec<Partition>, IdentityError> {
    Ok(t.iter().map(|p| p.with_len(len)).collect::<Result<_, _>>()?)
}

/// The exponent `d(lam, mu)` of the gray partition function.
pub fn d_stat(lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> Result<i64, IdentityError> {
    gray_bounds(lam, mu, m, l1, l2)?;
    let tilde: Vec<Partition> = mu
        .iter()
        .map(|p| {
            let mut parts = vec![l2; m];
            parts.extend(p.with_len(l1 - m)?.parts());
            Partition::new(parts)
        })
        .collect::<Result<_, _>>()?;
    Ok(a_count(&tilde, l1) - a_count(lam, l1))
}

/// The exponent `d_P(lam, mu)` of the light purple partition function.
pub fn dp_stat(lam: &[Partition], mu: &[Partition]) -> Result<i64, IdentityError> {
    bounds(lam.len() == mu.len(), "tuples of different lengths")?;
    let len = max_len(lam).max(max_len(mu));
    Ok(a_count(mu, len) - a_count(lam, len))
}

/// `x^{rho_m} = x1^(m-1) ... xm^0`, raised to `k`, times `(x1...xm)^e`.
fn prefactor(m: usize, k: usize, e: i64, vars: &Arc<VarSet>) -> Result<Poly, IdentityError> {
    let mut out = Poly::one(vars);
    for i in 1..=m {
        let pow = e + (k * (m - i)) as i64;
        out = &out * &Poly::var_pow(vars, &format!("x{i}"), pow as i32)?;
    }
    Ok(out)
}

/// Gray rows `x1..xm` over `lam` (bottom, origin 0) and `mu` (top, origin -m).
pub fn l_star_direct(
    lam: &[Partition],
    mu: &[Partition],
    m: usize,
    l1: usize,
    l2: u32,
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    gray_bounds(lam, mu, m, l1, l2)?;
    let k = lam.len();
    let (cmin, cmax) = (1 - l1 as i32, l2 as i32);
    let bottom = boundary_encode(&padded(lam, l1)?, cmin, cmax, 0)?;
    let top = boundary_encode(&padded(mu, l1 - m)?, cmin, cmax, -(m as i32))?;
    let rows = names("x", m).into_iter().map(|v| Row::gray(v, k)).collect();
    let spec = LatticeSpec::new(k, cmin, cmax, 0, rows, bottom, top)?;
    Ok(partition_function(&spec, vars)?)
}

/// `(x1...xm)^((l1-m)k) (x^rho)^k t^((m l1 - C(m+1,2)) C(k,2)) t^d L_{lam/mu}(X_m)`.
pub fn l_star_closed(
    lam: &[Partition],
    mu: &[Partition],
    m: usize,
    l1: usize,
    l2: u32,
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    let k = lam.len();
    let d = d_stat(lam, mu, m, l1, l2)?;
    let c2 = (k * k.saturating_sub(1) / 2) as i64;
    let te = (m * l1) as i64 * c2 - (m * (m + 1) / 2) as i64 * c2 + d;
    let shape = SkewTuple::new(padded(lam, l1)?, padded(mu, l1)?);
    let Ok(shape) = shape else {
        return Ok(Poly::zero(vars));
    };
    let l = llt(&shape, &names("x", m), vars)?;
    Ok(&(&prefactor(m, k, ((l1 - m) * k) as i64, vars)? * &t_pow(vars, te)) * &l)
}

/// Light purple rows `x1..xm` over `lam` (bottom, origin 0) and `mu` (top, origin m).
pub fn lp_star_direct(
    lam: &[Partition],
    mu: &[Partition],
    m: usize,
    l1: usize,
    l2: u32,
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    light_bounds(lam, mu, m, l1, l2)?;
    let k = lam.len();
    let (cmin, cmax) = (1 - l1 as i32, l2 as i32);
    let bottom = boundary_encode(&padded(lam, l1)?, cmin, cmax, 0)?;
    let top = boundary_encode(&padded(mu, l1 + m)?, cmin, cmax, m as i32)?;
    let rows = names("x", m).into_iter().map(|v| Row::light_purple(v, k)).collect();
    let spec = LatticeSpec::new(k, cmin, cmax, 0, rows, bottom, top)?;
    Ok(partition_function(&spec, vars)?)
}

/// `(x1...xm)^(k(l2-m+1)) (x^rho)^k t^(d_P) L^P_{lam/mu}(X_m)`.
pub fn lp_star_closed(
    lam: &[Partition],
    mu: &[Partition],
    m: usize,
    l1: usize,
    l2: u32,
    vars: &Arc<VarSet>,
) -> Result<Poly, IdentityError> {
    light_bounds(lam, mu, m, l1, l2)?;
    let k = lam.len();
    let len = l1 + m;
    let shape = SkewTuple::new(padded(lam, len)?, padded(mu, len)?);
    let Ok(shape) = shape else {
        return Ok(Poly::zero(vars));
    };
    let l = llt_purple(&shape, &names("x", m), vars)?;
    let e = k as i64 * (l2 as i64 - m as i64 + 1);
    Ok(&(&prefactor(m, k, e, vars)? * &t_pow(vars, dp_stat(lam, mu)?)) * &l)
}

fn describe(name: &str, lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> String {
    format!("{name} {}/{} m={m} l1={l1} l2={l2}", TupleDisplay(lam), TupleDisplay(mu))
}

/// Direct gray lattice against the closed form. A mismatch points at the
/// `x^rho` convention first.
pub fn check_l_star(lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(m, 0, 0, 0, &[]);
    let direct = l_star_direct(lam, mu, m, l1, l2, &vars)?;
    let closed = l_star_closed(lam, mu, m, l1, l2, &vars)?;
    let w = differ(&direct, &closed).map(|w| format!("convention mismatch: {w}"));
    Ok(VerificationReport::check("l_star", describe("gray", lam, mu, m, l1, l2), w))
}

pub fn check_lp_star(lam: &[Partition], mu: &[Partition], m: usize, l1: usize, l2: u32) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(m, 0, 0, 0, &[]);
    let direct = lp_star_direct(lam, mu, m, l1, l2, &vars)?;
    let closed = lp_star_closed(lam, mu, m, l1, l2, &vars)?;
    let w = differ(&direct, &closed).map(|w| format!("convention mismatch: {w}"));
    Ok(VerificationReport::check("lp_star", describe("light purple", lam, mu, m, l1, l2), w))
}

/// Smallest `(l1, l2)` allowed for the gray lattice.
pub fn gray_thresholds(lam: &[Partition], mu: &[Partition], m: usize) -> (usize, u32) {
    (max_len(lam).max(max_len(mu) + m).max(1), max_part(lam).max(max_part(mu)).max(1))
}

/// Smallest `(l1, l2)` allowed for the light purple lattice.
pub fn light_thresholds(lam: &[Partition], mu: &[Partition], m: usize) -> (usize, u32) {
    let l1 = max_len(lam).max(max_len(mu).saturating_sub(m)).max(1);
    (l1, max_part(lam).max(max_part(mu) + m as u32).max(1))
}

/// Both checks at the two smallest admissible values of `l1` and of `l2`;
/// also compares the `d` values across the sweep.
pub fn check_star_stability(lam: &[Partition], mu: &[Partition], m: usize) -> Result<Vec<VerificationReport>, IdentityError> {
    let mut out = Vec::new();
    let (g1, g2) = gray_thresholds(lam, mu, m);
    let d0 = d_stat(lam, mu, m, g1, g2)?;
    let mut drift = None;
    for (l1, l2) in [(g1, g2), (g1 + 1, g2), (g1, g2 + 1), (g1 + 1, g2 + 1)] {
        out.push(check_l_star(lam, mu, m, l1, l2)?);
        let d = d_stat(lam, mu, m, l1, l2)?;
        if d != d0 {
            drift = Some(format!("d = {d} at l1={l1} l2={l2}, {d0} at the thresholds"));
        }
    }
    out.push(VerificationReport::check("d_stable", describe("gray", lam, mu, m, g1, g2), drift));
    let (p1, p2) = light_thresholds(lam, mu, m);
    for (l1, l2) in [(p1, p2), (p1 + 1, p2), (p1, p2 + 1), (p1 + 1, p2 + 1)] {
        out.push(check_lp_star(lam, mu, m, l1, l2)?);
    }
    Ok(out)
}
