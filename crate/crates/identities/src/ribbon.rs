use std::collections::BTreeSet;

use llt_algebra::{Poly, VarSet};
use llt_lattice::{box_statistic, configurations, partition_function, quotient_lattice};
use llt_shapes::{aligned_k_quotient, Partition};
use llt_tableaux::{coinv, coinv_llt, count_triples, enum_srt, enum_sssyt, inv, inv_llt, super_ribbon_g};
use serde::Serialize;

use crate::polys::{invert_t, t_pow};
use crate::report::{differ, VerificationReport};
use crate::IdentityError;

fn describe(lam: &Partition, mu: &Partition, k: usize) -> String {
    format!("{lam}/{mu} k={k}")
}

/// Twice the box statistic of `lam / mu`, or `None` when the lattice has no
/// configuration. Errors if it is not constant.
pub fn twice_box(lam: &Partition, mu: &Partition, k: usize, n: usize, m: usize) -> Result<Option<i64>, IdentityError> {
    let (_, spec) = quotient_lattice(lam, mu, k, n, m)?;
    let values: BTreeSet<i64> = configurations(&spec).iter().map(|c| box_statistic(&spec, c)).collect();
    match values.len() {
        0 => Ok(None),
        1 => Ok(values.first().copied()),
        _ => Err(IdentityError::Invalid(format!("box statistic takes the values {values:?}"))),
    }
}

/// `L^S(x; y; t^2) = t^(2 box) G(x; y; t)` on the aligned quotient.
pub fn check_l_equals_g(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<VerificationReport, IdentityError> {
    let inst = format!("{} n={n} m={m}", describe(lam, mu, k));
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let (_, spec) = quotient_lattice(lam, mu, k, n, m)?;
    let lhs = partition_function(&spec, &vars)?.subs("t", &t_pow(&vars, 2))?;
    let g = super_ribbon_g(lam, mu, k, n, m)?;
    let b = match twice_box(lam, mu, k, n, m) {
        Ok(b) => b.unwrap_or(0),
        Err(e) => return Ok(VerificationReport::fail("l_equals_g", inst, e.to_string())),
    };
    Ok(VerificationReport::check("l_equals_g", inst, differ(&lhs, &(&t_pow(&vars, b) * &g))))
}

/// Normalizing constants relating the other formulations: `m` (triples),
/// `e` (max inv), `star` and `dagger` (min and max spin, doubled).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OtherForms {
    pub triples: i64,
    pub max_inv: i64,
    pub min_coinv: i64,
    pub twice_star: i64,
    pub twice_dagger: i64,
}

/// Constants for `lam / mu` with `n` variables, by enumeration.
pub fn other_form_constants(lam: &Partition, mu: &Partition, k: usize, n: usize) -> Result<Option<OtherForms>, IdentityError> {
    let q = aligned_k_quotient(lam, mu, k)?;
    let ssyt = enum_sssyt(&q, n, 0);
    let srt = enum_srt(lam, mu, k, n, 0)?;
    if ssyt.is_empty() || srt.is_empty() {
        return Ok(None);
    }
    let spins = || srt.iter().map(|t| t.spin() as i64);
    Ok(Some(OtherForms {
        triples: count_triples(&q) as i64,
        max_inv: ssyt.iter().map(|t| inv(t) as i64).max().unwrap_or(0),
        min_coinv: ssyt.iter().map(|t| coinv(t) as i64).min().unwrap_or(0),
        twice_star: spins().min().unwrap_or(0),
        twice_dagger: spins().max().unwrap_or(0),
    }))
}

/// The HHL, sp, Lam and cosp conversions, each as an exact identity.
pub fn check_other_forms(lam: &Partition, mu: &Partition, k: usize, n: usize) -> Result<Vec<VerificationReport>, IdentityError> {
    let inst = format!("{} n={n}", describe(lam, mu, k));
    let q = aligned_k_quotient(lam, mu, k)?;
    let Some(c) = other_form_constants(lam, mu, k, n)? else {
        let l = coinv_llt(&q, n);
        let r = VerificationReport::check("other_forms", inst, (!l.is_zero()).then(|| format!("no tableaux but L = {l}")));
        return Ok(vec![r]);
    };
    let l = coinv_llt(&q, n);
    let vars = l.vars().clone();
    let mut out = Vec::new();

    let hhl = &t_pow(&vars, c.triples) * &invert_t(&inv_llt(&q, n))?;
    out.push(VerificationReport::check("hhl", inst.clone(), differ(&l, &hhl)));
    let mut w = None;
    if c.triples != c.min_coinv + c.max_inv {
        w = Some(format!("triples {} != min coinv {} + max inv {}", c.triples, c.min_coinv, c.max_inv));
    }
    out.push(VerificationReport::check("triple_count", inst.clone(), w));

    let srt = enum_srt(lam, mu, k, n, 0)?;
    let sum_with = |f: &dyn Fn(i64) -> i64| -> Result<Poly, IdentityError> {
        let mut acc = Poly::zero(&vars);
        for t in &srt {
            let s = t.spin() as i64;
            acc = &acc + &(&t_pow(&vars, f(s) - s) * &t.monomial(&vars)?);
        }
        Ok(acc)
    };
    let l2 = l.subs("t", &t_pow(&vars, 2))?;
    let shift = 2 * (c.triples - c.max_inv);

    let sp = &t_pow(&vars, shift) * &sum_with(&|s| s - c.twice_star)?;
    out.push(VerificationReport::check("sp", inst.clone(), differ(&l2, &sp)));

    let lam_poly = sum_with(&|s| s)?;
    let g = super_ribbon_g(lam, mu, k, n, 0)?;
    let mut w = differ(&lam_poly, &g);
    if w.is_none() {
        w = differ(&l2, &(&t_pow(&vars, shift - c.twice_star) * &lam_poly));
    }
    out.push(VerificationReport::check("lam", inst.clone(), w));

    let cosp = sum_with(&|s| s - c.twice_dagger)?;
    let rhs = &t_pow(&vars, shift + c.twice_dagger - c.twice_star) * &cosp;
    out.push(VerificationReport::check("cosp", inst, differ(&l2, &rhs)));
    Ok(out)
}
