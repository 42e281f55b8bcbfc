use llt_algebra::VarSet;
use llt_lattice::{configurations, LatticeSpec};
use llt_shapes::{Partition, SkewTuple, TupleDisplay};

use crate::polys::{invert_t, lattice_poly, llt, llt_purple, names, t_pow};
use crate::report::{differ, VerificationReport};
use crate::IdentityError;

/// Number of ordered color pairs `i < j` that are good in a face of the
/// single row configuration of a horizontal strip: `i` leaves right while
/// `j` is present, or `i` is absent while `j` comes in from the left.
pub fn g_tilde(strip: &SkewTuple) -> Result<i64, IdentityError> {
    let spec = LatticeSpec::white(strip, 1)?;
    let cs = configurations(&spec);
    let [c] = cs.as_slice() else {
        return Err(IdentityError::NotStrip(strip.to_string()));
    };
    let k = spec.k;
    let mut total = 0;
    for col in 0..spec.width() {
        let e = [c.levels[0][col], c.horizontals[0][col], c.levels[1][col], c.horizontals[0][col + 1]];
        let present = |a: usize| e.iter().any(|s| s.has(a));
        for i in 1..=k {
            for j in i + 1..=k {
                if (e[3].has(i) && present(j)) || (!present(i) && e[1].has(j)) {
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}

/// `g(lam) = g(mu) + g_tilde(lam / mu)` along the strip that drops every
/// part to the next one, with `g(0) = 0`.
pub fn g(lam: &[Partition]) -> Result<i64, IdentityError> {
    if lam.iter().all(|p| p.size() == 0) {
        return Ok(0);
    }
    let mu: Vec<Partition> = lam
        .iter()
        .map(|p| {
            let parts = (1..=p.len()).map(|r| p.part(r + 1)).collect();
            Partition::new(parts)
        })
        .collect::<Result<_, _>>()?;
    let strip = SkewTuple::new(lam.to_vec(), mu.clone())?;
    Ok(g(&mu)? + g_tilde(&strip)?)
}

/// Every `mu != lam` with `lam / mu` a horizontal strip.
pub fn strips_below(lam: &[Partition]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for p in lam {
        let mut options = Vec::new();
        fn rec(p: &Partition, r: usize, cur: &mut Vec<u32>, options: &mut Vec<Partition>) {
            if r > p.len() {
                options.push(Partition::new(cur.clone()).expect("interlacing"));
                return;
            }
            for v in p.part(r + 1)..=p.part(r) {
                cur.push(v);
                rec(p, r + 1, cur, options);
                cur.pop();
            }
        }
        rec(p, 1, &mut Vec::new(), &mut options);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    out.retain(|mu| mu.as_slice() != lam);
    out
}

/// Well-definedness of `g`: every strip below `lam` gives the same value.
pub fn check_g_chains(lam: &[Partition]) -> Result<VerificationReport, IdentityError> {
    let want = g(lam)?;
    for mu in strips_below(lam) {
        let strip = SkewTuple::new(lam.to_vec(), mu.clone())?;
        let got = g(&mu)? + g_tilde(&strip)?;
        if got != want {
            return Ok(VerificationReport::fail(
                "g_chain",
                TupleDisplay(lam).to_string(),
                format!("via {}: {got} != {want}", TupleDisplay(&mu)),
            ));
        }
    }
    Ok(VerificationReport::pass("g_chain", TupleDisplay(lam).to_string()))
}

/// Conjugate tuple with `n` parts per component, `n` at least the largest part.
pub fn conjugate(lam: &[Partition], n: usize) -> Result<Vec<Partition>, IdentityError> {
    Ok(llt_shapes::conjugate_tuple(lam, n)?)
}

pub fn check_g_conjugate(lam: &[Partition]) -> Result<VerificationReport, IdentityError> {
    let n = lam.iter().map(|p| p.largest() as usize).max().unwrap_or(0).max(1);
    let conj = conjugate(lam, n)?;
    Ok(VerificationReport::check("g_conjugate", TupleDisplay(lam).to_string(), differ(&g(lam)?, &g(&conj)?)))
}

/// One white row against one purple row of the conjugate shape:
/// `L(x; t) = t^(g(lam) - g(mu)) L^P'(x; 1/t)`.
pub fn check_strip_duality(strip: &SkewTuple) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(1, 0, 0, 0, &[]);
    let xs = names("x", 1);
    let n = strip.max_part() as usize;
    let conj = strip.conjugate(n.max(1))?;
    let lhs = llt(strip, &xs, &vars)?;
    let e = g(strip.lam())? - g(strip.mu())?;
    let rhs = &t_pow(&vars, e) * &invert_t(&llt_purple(&conj, &xs, &vars)?)?;
    Ok(VerificationReport::check("strip_duality", strip.to_string(), differ(&lhs, &rhs)))
}

/// `L^S(X; Y; t) = t^(g(lam) - g(mu)) L^S'(Y; X; 1/t)` on the conjugate shape.
pub fn check_xy_swap(shape: &SkewTuple, n: usize, m: usize) -> Result<VerificationReport, IdentityError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let (xs, ys) = (names("x", n), names("y", m));
    let conj = shape.conjugate(shape.max_part().max(1) as usize)?;
    let lhs = lattice_poly(shape, &xs, &ys, &vars)?;
    let e = g(shape.lam())? - g(shape.mu())?;
    let rhs = &t_pow(&vars, e) * &invert_t(&lattice_poly(&conj, &ys, &xs, &vars)?)?;
    Ok(VerificationReport::check("xy_swap", format!("{shape} n={n} m={m}"), differ(&lhs, &rhs)))
}
