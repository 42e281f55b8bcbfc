use std::collections::BTreeSet;

use llt_lattice::{configurations, psi, quotient_lattice, theta, theta_inverse, LatticeConfig};
use llt_shapes::{charged_quotient, skew_k_quotient, Partition};
use llt_tableaux::{content, enum_srt, enum_sssyt, littlewood_inverse, littlewood_map, Ribbon, RibbonTableau, SuperLabel};

use crate::report::VerificationReport;
use crate::IdentityError;

fn describe(lam: &Partition, mu: &Partition, k: usize) -> String {
    format!("{lam}/{mu} k={k}")
}

/// The Littlewood map and `theta` are bijections: equal cardinalities,
/// injective images and round trips in both directions.
pub fn check_bijections(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<VerificationReport, IdentityError> {
    let inst = format!("{} n={n} m={m}", describe(lam, mu, k));
    let fail = |w: String| Ok(VerificationReport::fail("bijection", inst.clone(), w));
    let srt = enum_srt(lam, mu, k, n, m)?;
    if skew_k_quotient(lam, mu, k).is_err() {
        return if srt.is_empty() { Ok(VerificationReport::pass("bijection", inst)) } else { fail("no quotient".into()) };
    }
    let quotient = skew_k_quotient(lam, mu, k)?;
    let sssyt = enum_sssyt(&quotient, n, m);
    if sssyt.len() != srt.len() {
        return fail(format!("{} ribbon tableaux, {} quotient tableaux", srt.len(), sssyt.len()));
    }
    let (_, spec) = quotient_lattice(lam, mu, k, n, m)?;
    let configs = configurations(&spec);
    if configs.len() != srt.len() {
        return fail(format!("{} ribbon tableaux, {} configurations", srt.len(), configs.len()));
    }
    let mut images = BTreeSet::new();
    for t in &srt {
        let q = littlewood_map(t)?;
        if &littlewood_inverse(&q, lam, mu, k)? != t {
            return fail(format!("Littlewood round trip fails on {t:?}"));
        }
        let (_, cfg) = theta(t, n, m)?;
        if &theta_inverse(&cfg, lam, mu, k, n, m)? != t {
            return fail(format!("theta round trip fails on {t:?}"));
        }
        images.insert(format!("{:?}", cfg));
    }
    if images.len() != srt.len() {
        return fail("theta is not injective".into());
    }
    for c in &configs {
        let t = theta_inverse(c, lam, mu, k, n, m)?;
        if &theta(&t, n, m)?.1 != c {
            return fail("theta inverse round trip fails".into());
        }
    }
    Ok(VerificationReport::pass("bijection", format!("{inst} size={}", srt.len())))
}

/// For a single ribbon `lam / mu` with tail `u` and adjusted content
/// `c(u) + p - 1 = q k + r`, the quotient is one cell `v` in component `r`
/// with `c(v) + (parts of component r) - 1 = q`.
pub fn check_content_transport(lam: &Partition, mu: &Partition, k: usize) -> Result<VerificationReport, IdentityError> {
    let inst = describe(lam, mu, k);
    let srt = enum_srt(lam, mu, k, 1, 0)?;
    let [t] = srt.as_slice() else {
        return Err(IdentityError::Invalid(format!("{inst} is not a single ribbon")));
    };
    if t.ribbons().len() != 1 {
        return Err(IdentityError::Invalid(format!("{inst} is not a single ribbon")));
    }
    let p = lam.len().max(mu.len()) as i64;
    let ac = content(t.ribbons()[0].0.tail()) + p - 1;
    let (q, r) = (ac.div_euclid(k as i64), ac.rem_euclid(k as i64) as usize);
    let cq = charged_quotient(lam, mu, k)?;
    let mut cells = Vec::new();
    for (i, (a, b)) in cq.lam.iter().zip(&cq.mu).enumerate() {
        for row in 1..=a.len() {
            for col in b.part(row) + 1..=a.part(row) {
                cells.push((i, col as i64 - row as i64));
            }
        }
    }
    let w = match cells.as_slice() {
        [(i, c)] if *i == r && c + cq.charges[r] as i64 - 1 == q => None,
        _ => Some(format!("tail content {ac} gives ({q}, {r}); quotient cells {cells:?}")),
    };
    Ok(VerificationReport::check("content_transport", inst, w))
}

/// Transposes a ribbon tableau, priming every label. The conjugate gets
/// enough parts that both Maya windows together span a multiple of `k`, so
/// residues reverse.
pub fn conjugate_ribbon_tableau(t: &RibbonTableau) -> Result<RibbonTableau, IdentityError> {
    let p = t.lam().len().max(t.mu().len());
    let mut n = t.lam().largest().max(t.mu().largest()) as usize;
    while !(p + n).is_multiple_of(t.k()) {
        n += 1;
    }
    let ribbons: Vec<(Ribbon, SuperLabel)> = t
        .ribbons()
        .iter()
        .map(|(r, l)| {
            let cells = r.cells().iter().map(|&(a, b)| (b, a)).collect();
            (Ribbon::new(cells), SuperLabel { primed: !l.primed, value: l.value })
        })
        .collect();
    Ok(RibbonTableau::new(t.lam().conjugate(n)?, t.mu().conjugate(n)?, t.k(), ribbons)?)
}

/// Horizontal edges as `(row, edge, color)`, shifted so the leftmost edge
/// used by any path sits at 0. Paths that only go straight up leave no trace.
fn normal_form(k: usize, cfg: &LatticeConfig) -> Vec<(usize, i64, usize)> {
    let mut out: Vec<(usize, i64, usize)> = cfg
        .horizontals
        .iter()
        .enumerate()
        .flat_map(|(r, h)| {
            h.iter().enumerate().flat_map(move |(e, s)| (1..=k).filter(|&c| s.has(c)).map(move |c| (r, e as i64, c)))
        })
        .collect();
    let first = out.iter().map(|x| x.1).min().unwrap_or(0);
    for x in &mut out {
        x.1 -= first;
    }
    out.sort();
    out
}

/// For a horizontal ribbon strip `T`, `theta` of the conjugate strip is
/// `psi` of `theta(T)`, up to moving each color sideways.
pub fn check_theta_commutes(lam: &Partition, mu: &Partition, k: usize) -> Result<VerificationReport, IdentityError> {
    let inst = describe(lam, mu, k);
    for t in enum_srt(lam, mu, k, 1, 0)? {
        let (_, cfg) = theta(&t, 1, 0)?;
        let image = psi(&cfg, k);
        let conj = conjugate_ribbon_tableau(&t)?;
        let (_, cfg2) = theta(&conj, 0, 1)?;
        let (a, b) = (normal_form(k, &image), normal_form(k, &cfg2));
        if a != b {
            return Ok(VerificationReport::fail(
                "theta_commutes",
                inst,
                format!("psi(theta(T)) edges {a:?}, theta(T') edges {b:?}"),
            ));
        }
    }
    Ok(VerificationReport::pass("theta_commutes", inst))
}
