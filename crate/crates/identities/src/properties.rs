use std::sync::Arc;

use itertools::Itertools;
use llt_algebra::{Poly, VarSet};
use llt_shapes::{Partition, SkewTuple, TupleDisplay};

use crate::gstat::{conjugate, g};
use crate::polys::{invert_t, llt, llt_purple, llt_super, names, t_pow, var};
use crate::report::{differ, VerificationReport};
use crate::IdentityError;

fn super_poly(shape: &SkewTuple, n: usize, m: usize, vars: &Arc<VarSet>) -> Result<Poly, IdentityError> {
    llt_super(shape, &names("x", n), &names("y", m), vars)
}

/// Invariance under every permutation of the `x` rows and of the `y` rows.
pub fn check_symmetry(shape: &SkewTuple, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let base = super_poly(shape, n, m, &vars)?;
    let inst = format!("{shape} n={n} m={m}");
    for (prefix, count) in [("x", n), ("y", m)] {
        let row_names = names(prefix, count);
        for perm in (0..count).permutations(count) {
            let order: Vec<String> = perm.iter().map(|&i| row_names[i].clone()).collect();
            let (xs, ys) = if prefix == "x" { (order, names("y", m)) } else { (names("x", n), order) };
            let got = llt_super(shape, &xs, &ys, &vars)?;
            if let Some(w) = differ(&got, &base) {
                return Ok(VerificationReport::fail("symmetry", inst, format!("{prefix} order {perm:?}: {w}")));
            }
        }
    }
    Ok(VerificationReport::pass("symmetry", inst))
}

/// `L^S(X_{n-1}, r; Y_{m-1}, -t^l r)`.
fn substituted(shape: &SkewTuple, n: usize, m: usize, l: i64) -> Result<(Poly, Arc<VarSet>), IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &["r"]);
    let r = var(&vars, "r")?;
    let p = super_poly(shape, n, m, &vars)?
        .subs(&format!("x{n}"), &r)?
        .subs(&format!("y{m}"), &-&(&t_pow(&vars, l) * &r))?;
    Ok((p, vars))
}

/// `L^S(X_{n-1}, r; Y_{m-1}, -r) = L^S(X_{n-1}; Y_{m-1})` in a free `r`.
pub fn check_cancellation(shape: &SkewTuple, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let inst = format!("{shape} n={n} m={m}");
    if n == 0 || m == 0 {
        return Ok(VerificationReport::pass("cancellation", inst));
    }
    let (lhs, vars) = substituted(shape, n, m, 0)?;
    let rhs = super_poly(shape, n - 1, m - 1, &vars)?;
    Ok(VerificationReport::check("cancellation", inst, differ(&lhs, &rhs)))
}

/// `L^S(r X; r Y) = r^|shape| L^S(X; Y)`.
pub fn check_homogeneity(shape: &SkewTuple, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &["r"]);
    let r = var(&vars, "r")?;
    let base = super_poly(shape, n, m, &vars)?;
    let mut scaled = base.clone();
    for v in names("x", n).into_iter().chain(names("y", m)) {
        scaled = scaled.subs(&v, &(&r * &var(&vars, &v)?))?;
    }
    let rhs = &Poly::var_pow(&vars, "r", shape.size() as i32)? * &base;
    Ok(VerificationReport::check("homogeneity", format!("{shape} n={n} m={m}"), differ(&scaled, &rhs)))
}

/// Setting the last `x` or the last `y` to zero drops that row.
pub fn check_restriction(shape: &SkewTuple, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let base = super_poly(shape, n, m, &vars)?;
    let zero = Poly::zero(&vars);
    let inst = format!("{shape} n={n} m={m}");
    if n > 0 {
        let lhs = base.subs(&format!("x{n}"), &zero)?;
        if let Some(w) = differ(&lhs, &super_poly(shape, n - 1, m, &vars)?) {
            return Ok(VerificationReport::fail("restriction", inst, format!("x{n}=0: {w}")));
        }
    }
    if m > 0 {
        let lhs = base.subs(&format!("y{m}"), &zero)?;
        if let Some(w) = differ(&lhs, &super_poly(shape, n, m - 1, &vars)?) {
            return Ok(VerificationReport::fail("restriction", inst, format!("y{m}=0: {w}")));
        }
    }
    Ok(VerificationReport::pass("restriction", inst))
}

/// `lam^(i) = (m + tau^(i), eta^(i))` with `tau` of `n` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub lam: Vec<Partition>,
    pub tau: Vec<Partition>,
    pub eta: Vec<Partition>,
}

impl Split {
    pub fn new(tau: Vec<Partition>, eta: Vec<Partition>, m: usize) -> Result<Split, IdentityError> {
        let lam = tau
            .iter()
            .zip(&eta)
            .map(|(a, b)| {
                let parts = a.parts().iter().map(|x| x + m as u32).chain(b.parts().iter().copied()).collect();
                Partition::new(parts)
            })
            .collect::<Result<_, _>>()?;
        Ok(Split { lam, tau, eta })
    }

    /// Every split with `tau` in an `n x tau_max` box and `eta` in an `s x m` box.
    pub fn all(k: usize, n: usize, m: usize, s: usize, tau_max: u32) -> Vec<Split> {
        let taus = llt_shapes::tuples_in_box(k, n, tau_max);
        let etas = llt_shapes::tuples_in_box(k, s, m as u32);
        taus.iter()
            .cartesian_product(&etas)
            .filter_map(|(t, e)| Split::new(t.clone(), e.clone(), m).ok())
            .collect()
    }

    fn describe(&self, n: usize, m: usize) -> String {
        format!("{} tau={} eta={} n={n} m={m}", TupleDisplay(&self.lam), TupleDisplay(&self.tau), TupleDisplay(&self.eta))
    }
}

fn kernel_product(k: usize, n: usize, m: usize, vars: &Arc<VarSet>) -> Result<Poly, IdentityError> {
    let mut out = Poly::one(vars);
    for l in 0..k {
        for i in 1..=n {
            for j in 1..=m {
                let f = &(&t_pow(vars, l as i64) * &var(vars, &format!("x{i}"))?) + &var(vars, &format!("y{j}"))?;
                out = &out * &f;
            }
        }
    }
    Ok(out)
}

/// `L^S_lam = L_tau(X) t^g(eta) L_eta'(Y; 1/t) prod (t^l x_i + y_j)`.
pub fn check_factorization(split: &Split, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let k = split.lam.len();
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let lhs = super_poly(&SkewTuple::straight(split.lam.clone())?, n, m, &vars)?;
    let tau = llt(&SkewTuple::straight(split.tau.clone())?, &names("x", n), &vars)?;
    let eta_conj = SkewTuple::straight(conjugate(&split.eta, m)?)?;
    let eta = &t_pow(&vars, g(&split.eta)?) * &invert_t(&llt(&eta_conj, &names("y", m), &vars)?)?;
    let rhs = &(&tau * &eta) * &kernel_product(k, n, m, &vars)?;
    Ok(VerificationReport::check("factorization", split.describe(n, m), differ(&lhs, &rhs)))
}

/// `L^S_lam = L^P_eta(Y) L^S_(m + tau)`, with `t^g(eta) L_eta'(Y; 1/t) = L^P_eta(Y)`.
pub fn check_eta_split(split: &Split, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let inst = split.describe(n, m);
    let ys = names("y", m);
    let purple = llt_purple(&SkewTuple::straight(split.eta.clone())?, &ys, &vars)?;
    let eta_conj = SkewTuple::straight(conjugate(&split.eta, m)?)?;
    let dual = &t_pow(&vars, g(&split.eta)?) * &invert_t(&llt(&eta_conj, &ys, &vars)?)?;
    if let Some(w) = differ(&dual, &purple) {
        return Ok(VerificationReport::fail("eta_split", inst, format!("purple factor: {w}")));
    }
    let shifted: Vec<Partition> = split
        .tau
        .iter()
        .map(|t| Partition::new(t.parts().iter().map(|x| x + m as u32).collect()))
        .collect::<Result<_, _>>()?;
    let lhs = super_poly(&SkewTuple::straight(split.lam.clone())?, n, m, &vars)?;
    let rhs = &purple * &super_poly(&SkewTuple::straight(shifted)?, n, m, &vars)?;
    Ok(VerificationReport::check("eta_split", inst, differ(&lhs, &rhs)))
}

/// `L^S_lam(X_{n-1}, r; Y_{m-1}, -t^l r) = 0` for `l < k`.
pub fn check_general_cancel(split: &Split, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let inst = split.describe(n, m);
    let shape = SkewTuple::straight(split.lam.clone())?;
    for l in 0..split.lam.len() as i64 {
        let (p, _) = substituted(&shape, n, m, l)?;
        if !p.is_zero() {
            return Ok(VerificationReport::fail("general_cancel", inst, format!("l={l}: {p}")));
        }
    }
    Ok(VerificationReport::pass("general_cancel", inst))
}

/// The full property bundle on one shape.
pub fn check_main3(shape: &SkewTuple, n: usize, m: usize) -> Result<Vec<VerificationReport>, IdentityError> {
    Ok(vec![
        check_symmetry(shape, n, m)?,
        check_cancellation(shape, n, m)?,
        check_homogeneity(shape, n, m)?,
        check_restriction(shape, n, m)?,
    ])
}

/// `#{a < b : nu_a > nu_b}`.
pub fn inv_count(rows: &[u32]) -> i64 {
    rows.iter().tuple_combinations().filter(|(a, b)| a > b).count() as i64
}

/// `L^S_lam = t^(Inv(lam) - Inv(nu)) L^S_nu` for one-row tuples.
pub fn check_single_row_swap(lam: &[u32], nu: &[u32], n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let inst = format!("{lam:?} vs {nu:?} n={n} m={m}");
    if lam.iter().sorted().ne(nu.iter().sorted()) {
        return Err(IdentityError::Invalid(format!("{nu:?} is not a rearrangement of {lam:?}")));
    }
    let straight = |rows: &[u32]| -> Result<SkewTuple, IdentityError> {
        let t = rows.iter().map(|&r| Partition::new(vec![r])).collect::<Result<_, _>>()?;
        Ok(SkewTuple::straight(t)?)
    };
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let lhs = super_poly(&straight(lam)?, n, m, &vars)?;
    let rhs = &t_pow(&vars, inv_count(lam) - inv_count(nu)) * &super_poly(&straight(nu)?, n, m, &vars)?;
    Ok(VerificationReport::check("single_row_swap", inst, differ(&lhs, &rhs)))
}
