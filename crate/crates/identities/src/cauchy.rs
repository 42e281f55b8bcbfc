use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use llt_algebra::{series_expand, Poly, RationalFn, TruncatedSeries, VarSet};
use llt_shapes::{Partition, SkewTuple, TupleDisplay};

use crate::polys::{llt, llt_purple, llt_super, names, t_pow, var};
use crate::report::{differ, VerificationReport};
use crate::star::{d_stat, dp_stat};
use crate::IdentityError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cauchy {
    C1,
    C2,
    C3,
    C4,
    Super,
}

impl Cauchy {
    pub const ALL: [Cauchy; 5] = [Cauchy::C1, Cauchy::C2, Cauchy::C3, Cauchy::C4, Cauchy::Super];

    pub fn name(self) -> &'static str {
        match self {
            Cauchy::C1 => "c1",
            Cauchy::C2 => "c2",
            Cauchy::C3 => "c3",
            Cauchy::C4 => "c4",
            Cauchy::Super => "ss",
        }
    }
}

impl fmt::Display for Cauchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Cauchy {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Cauchy, IdentityError> {
        Cauchy::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| IdentityError::Invalid(format!("unknown Cauchy identity `{s}`")))
    }
}

/// Number of variables in each family `x, y, w, z`. Only `ss` uses `w, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarCounts {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub q: usize,
}

impl VarCounts {
    pub const ONE: VarCounts = VarCounts { n: 1, m: 1, p: 1, q: 1 };

    fn for_identity(self, which: Cauchy) -> VarCounts {
        match which {
            Cauchy::Super => self,
            _ => VarCounts { p: 0, q: 0, ..self },
        }
    }
}

/// Every tuple containing `base` with at most `extra` more cells.
pub fn extensions(base: &[Partition], extra: u32) -> Vec<Vec<Partition>> {
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut frontier = vec![base.to_vec()];
    let key = |t: &[Partition]| t.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>();
    seen.insert(key(base));
    let mut out = vec![base.to_vec()];
    for _ in 0..extra {
        let mut next = Vec::new();
        for t in &frontier {
            for (i, p) in t.iter().enumerate() {
                for r in 1..=p.len() {
                    if r == 1 || p.part(r - 1) > p.part(r) {
                        let mut parts = p.parts().to_vec();
                        parts[r - 1] += 1;
                        let mut u = t.clone();
                        u[i] = Partition::new(parts).expect("addable cell");
                        if seen.insert(key(&u)) {
                            next.push(u.clone());
                            out.push(u);
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every tuple contained in `top`.
fn below(top: &[Partition]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for p in top {
        let opts: Vec<Partition> =
            llt_shapes::partitions_in_box(p.len(), p.largest()).into_iter().filter(|q| p.contains(q)).collect();
        out = out
            .into_iter()
            .flat_map(|pre| {
                opts.iter().map(move |o| {
                    let mut v = pre.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn contains(a: &[Partition], b: &[Partition]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.contains(y))
}

fn size(t: &[Partition]) -> u32 {
    t.iter().map(Partition::size).sum()
}

struct Ctx {
    vars: Arc<VarSet>,
    counts: VarCounts,
    /// Common part count of every tuple.
    parts: usize,
    l2: u32,
}

impl Ctx {
    fn skew(&self, lam: &[Partition], mu: &[Partition]) -> Result<SkewTuple, IdentityError> {
        Ok(SkewTuple::new(lam.to_vec(), mu.to_vec())?)
    }

    /// `d` with the gray block made of `m` rows.
    fn d(&self, lam: &[Partition], mu: &[Partition], m: usize) -> Result<i64, IdentityError> {
        d_stat(lam, mu, m, self.parts + m, self.l2)
    }

    fn white(&self, lam: &[Partition], mu: &[Partition], family: &str, count: usize) -> Result<Poly, IdentityError> {
        llt(&self.skew(lam, mu)?, &names(family, count), &self.vars)
    }

    fn purple(&self, lam: &[Partition], mu: &[Partition], family: &str, count: usize) -> Result<Poly, IdentityError> {
        llt_purple(&self.skew(lam, mu)?, &names(family, count), &self.vars)
    }

    fn sup(&self, lam: &[Partition], mu: &[Partition], a: (&str, usize), b: (&str, usize)) -> Result<Poly, IdentityError> {
        llt_super(&self.skew(lam, mu)?, &names(a.0, a.1), &names(b.0, b.1), &self.vars)
    }

    /// `prod_l prod_{i,j} (1 + sign a_i b_j t^l)`.
    fn omega(&self, k: usize, a: (&str, usize), b: (&str, usize), sign: i64) -> Result<Poly, IdentityError> {
        let mut out = Poly::one(&self.vars);
        for l in 0..k {
            for i in 1..=a.1 {
                for j in 1..=b.1 {
                    let ab = &var(&self.vars, &format!("{}{i}", a.0))? * &var(&self.vars, &format!("{}{j}", b.0))?;
                    let f = &Poly::one(&self.vars) + &(&t_pow(&self.vars, l as i64) * &ab).scale(sign);
                    out = &out * &f;
                }
            }
        }
        Ok(out)
    }
}

/// One side of an identity: the finite sum over tuples inside both
/// boundaries, and the sum over tuples containing both that multiplies the
/// kernel.
fn terms(
    which: Cauchy,
    ctx: &Ctx,
    mu: &[Partition],
    nu: &[Partition],
    degree: u32,
) -> Result<(Poly, RationalFn, Poly), IdentityError> {
    let k = mu.len();
    let VarCounts { n, m, p, q } = ctx.counts;
    let vars = &ctx.vars;
    let mut finite = Poly::zero(vars);
    let meet: Vec<Partition> = mu
        .iter()
        .zip(nu)
        .map(|(a, b)| Partition::new(a.parts().iter().zip(b.parts()).map(|(x, y)| *x.min(y)).collect()))
        .collect::<Result<_, _>>()?;
    for lam in below(&meet) {
        let term = match which {
            Cauchy::C1 => {
                &t_pow(vars, ctx.d(mu, &lam, m)?) * &(&ctx.white(nu, &lam, "x", n)? * &ctx.white(mu, &lam, "y", m)?)
            }
            Cauchy::C2 => {
                &t_pow(vars, ctx.d(mu, &lam, m)?) * &(&ctx.white(mu, &lam, "y", m)? * &ctx.purple(nu, &lam, "x", n)?)
            }
            Cauchy::C3 => {
                &t_pow(vars, dp_stat(mu, &lam)?) * &(&ctx.purple(mu, &lam, "x", n)? * &ctx.white(nu, &lam, "y", m)?)
            }
            Cauchy::C4 => {
                &t_pow(vars, dp_stat(mu, &lam)?) * &(&ctx.purple(mu, &lam, "x", n)? * &ctx.purple(nu, &lam, "y", m)?)
            }
            Cauchy::Super => {
                let a = ctx.sup(nu, &lam, ("x", n), ("y", m))?;
                let b = ctx.sup(mu, &lam, ("w", p), ("z", q))?;
                &t_pow(vars, ctx.d(mu, &lam, p)?) * &(&a * &b)
            }
        };
        finite = &finite + &term;
    }

    let join: Vec<Partition> = mu
        .iter()
        .zip(nu)
        .map(|(a, b)| Partition::new(a.parts().iter().zip(b.parts()).map(|(x, y)| *x.max(y)).collect()))
        .collect::<Result<_, _>>()?;
    let base = size(&join) * 2 - size(mu) - size(nu);
    let mut infinite = Poly::zero(vars);
    if base <= degree {
        for lam in extensions(&join, (degree - base) / 2) {
            debug_assert!(contains(&lam, mu) && contains(&lam, nu));
            let term = match which {
                Cauchy::C1 => {
                    &t_pow(vars, ctx.d(&lam, nu, m)?) * &(&ctx.white(&lam, mu, "x", n)? * &ctx.white(&lam, nu, "y", m)?)
                }
                Cauchy::C2 => {
                    &t_pow(vars, ctx.d(&lam, nu, m)?) * &(&ctx.purple(&lam, mu, "x", n)? * &ctx.white(&lam, nu, "y", m)?)
                }
                Cauchy::C3 => {
                    &t_pow(vars, dp_stat(&lam, nu)?) * &(&ctx.white(&lam, mu, "y", m)? * &ctx.purple(&lam, nu, "x", n)?)
                }
                Cauchy::C4 => {
                    &t_pow(vars, dp_stat(&lam, nu)?) * &(&ctx.purple(&lam, mu, "y", m)? * &ctx.purple(&lam, nu, "x", n)?)
                }
                Cauchy::Super => {
                    let a = ctx.sup(&lam, mu, ("x", n), ("y", m))?;
                    let b = ctx.sup(&lam, nu, ("w", p), ("z", q))?;
                    &t_pow(vars, ctx.d(&lam, nu, p)?) * &(&a * &b)
                }
            };
            infinite = &infinite + &term;
        }
    }

    let (x, y, w, z) = (("x", n), ("y", m), ("w", p), ("z", q));
    let (num, den) = match which {
        Cauchy::C1 | Cauchy::C4 => (ctx.omega(k, x, y, -1)?, Poly::one(vars)),
        Cauchy::C2 | Cauchy::C3 => (Poly::one(vars), ctx.omega(k, x, y, 1)?),
        Cauchy::Super => (
            &ctx.omega(k, x, w, -1)? * &ctx.omega(k, y, z, -1)?,
            &ctx.omega(k, y, w, 1)? * &ctx.omega(k, x, z, 1)?,
        ),
    };
    Ok((finite, RationalFn::new(num, den)?, infinite))
}

/// Checks the identity between the finite sum and kernel times the sum over
/// larger tuples, as power series up to total degree `degree` in every
/// variable other than `t`. `mu` and `nu` must have the same number of
/// components.
pub fn check_cauchy(
    which: Cauchy,
    mu: &[Partition],
    nu: &[Partition],
    counts: VarCounts,
    degree: u32,
) -> Result<VerificationReport, IdentityError> {
    if mu.len() != nu.len() || mu.is_empty() {
        return Err(IdentityError::Invalid("mu and nu need the same positive number of components".into()));
    }
    let counts = counts.for_identity(which);
    let VarCounts { n, m, p, q } = counts;
    let vars = VarSet::families(n, m, p, q, &[]);
    let longest = mu.iter().chain(nu).map(Partition::length).max().unwrap_or(0);
    let parts = longest + degree as usize;
    let widest = mu.iter().chain(nu).map(Partition::largest).max().unwrap_or(0);
    let pad = |t: &[Partition]| t.iter().map(|x| x.with_len(parts)).collect::<Result<Vec<_>, _>>();
    let (mu, nu) = (pad(mu)?, pad(nu)?);
    let ctx = Ctx { vars: vars.clone(), counts, parts, l2: widest + degree + 1 };
    let (finite, kernel, infinite) = terms(which, &ctx, &mu, &nu, degree)?;

    let capped: Vec<String> = vars.names()[1..].to_vec();
    let capped: Vec<&str> = capped.iter().map(String::as_str).collect();
    let lhs = TruncatedSeries::new(&finite, &capped, degree as i64)?;
    let rhs = series_expand(&kernel, &capped, degree as i64)?.mul_poly(&infinite);
    let inst = format!(
        "k={} mu={} nu={} n={n} m={m} p={p} q={q} D={degree}",
        mu.len(),
        TupleDisplay(&mu),
        TupleDisplay(&nu)
    );
    Ok(VerificationReport::check(which.name(), inst, differ(lhs.poly(), rhs.poly())))
}
