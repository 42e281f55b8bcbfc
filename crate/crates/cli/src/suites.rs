use llt_algebra::{Poly, VarSet};
use llt_identities::{
    check_bijections, check_cancellation_flip, check_cauchy, check_content_transport, check_corner_flip,
    check_eta_split, check_factorization, check_g_chains, check_g_conjugate, check_general_cancel, check_l_equals_g,
    check_main3, check_other_forms, check_single_row_swap, check_star_stability, check_strip_duality,
    check_theta_commutes, check_xy_swap, differ, strips_below, verify_weight_tables, verify_ybe, Cauchy, Split,
    VarCounts, VerificationReport, Ybe,
};
use llt_shapes::{aligned_k_quotient, partitions_of, tuples_in_box, Partition, SkewTuple};
use llt_tableaux::{coinv_llt, enum_srt, super_ribbon_g};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compute::{lattice_poly, super_by_ribbons, super_by_tableaux, twice_box_values, LatticeType};
use crate::CliError;

/// Suites in dependency order: later ones rely on what earlier ones check.
pub const ORDER: [&str; 12] = [
    "algebra",
    "weights",
    "ybe",
    "examples",
    "lattice",
    "main3",
    "g",
    "box",
    "star",
    "other-forms",
    "bijection",
    "cauchy",
];

#[derive(Clone, Debug)]
#[derive(Default)]
pub struct SuiteOpts {
    pub k: Option<usize>,
    pub slow: bool,
    pub seed: u64,
    pub degree: Option<u32>,
}


impl SuiteOpts {
    fn ks(&self, default: &[usize]) -> Vec<usize> {
        self.k.map_or_else(|| default.to_vec(), |k| vec![k])
    }
}

pub fn run_suite(name: &str, opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    match name {
        "algebra" => algebra(opts),
        "weights" => Ok(opts.ks(&[1, 2, 3]).into_iter().map(verify_weight_tables).collect()),
        "ybe" => {
            let ks = if opts.slow { opts.ks(&[1, 2, 3]) } else { opts.ks(&[1, 2]) };
            Ok(ks.into_iter().flat_map(|k| Ybe::ALL.map(|w| verify_ybe(w, k))).collect())
        }
        "examples" => examples(),
        "lattice" => lattice(opts),
        "main3" => main3(opts),
        "g" => g_suite(opts),
        "box" => box_suite(opts),
        "star" => star(opts),
        "other-forms" => other_forms(opts),
        "bijection" => bijection(opts),
        "cauchy" => cauchy(opts),
        _ => Err(CliError::Usage(format!("unknown suite `{name}`; expected all or one of {}", ORDER.join(", ")))),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &std::sync::Arc<VarSet>) -> Poly {
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let e: Vec<i32> = (0..vars.len()).map(|_| rng.gen_range(-2..=2)).collect();
        (e, BigInt::from(rng.gen_range(-3..=3)))
    });
    Poly::from_terms(vars, terms.collect::<Vec<_>>())
}

fn algebra(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let vars = VarSet::families(1, 1, 0, 0, &[]);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for i in 0..50 {
        let (a, b, c) = (random_poly(&mut rng, &vars), random_poly(&mut rng, &vars), random_poly(&mut rng, &vars));
        let inst = format!("seed={} triple={i}", opts.seed);
        let mut w = differ(&(&(&a + &b) + &c), &(&a + &(&b + &c)))
            .or_else(|| differ(&(&(&a * &b) * &c), &(&a * &(&b * &c))))
            .or_else(|| differ(&(&a * &b), &(&b * &a)))
            .or_else(|| differ(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
        if w.is_none() && !b.is_zero() {
            let q = (&a * &b).div_exact(&b);
            if q.as_ref() != Some(&a) {
                w = Some(format!("({a})*({b}) / ({b}) gave {q:?}"));
            }
        }
        out.push(VerificationReport::check("ring_laws", inst, w));
    }
    Ok(out)
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn tuple(s: &str) -> Vec<Partition> {
    llt_shapes::parse_tuple(s).expect("literal tuple")
}

/// Three computations of `L^S`, the ribbon function relation and the box
/// statistic for one ribbon shape.
fn example(
    name: &str,
    quotient: &str,
    lam: &[u32],
    k: usize,
    want_l: &str,
    want_g: Option<&str>,
    twice_box: i64,
) -> Result<Vec<VerificationReport>, CliError> {
    let vars = VarSet::families(1, 1, 0, 0, &[]);
    let want = Poly::parse(&vars, want_l)?;
    let shape = SkewTuple::straight(tuple(quotient))?;
    let (lam, mu) = (part(lam), part(&[]));
    let inst = format!("{name}: {shape}, lambda = {lam}, k = {k}");
    let mut out = vec![
        VerificationReport::check("lattice_transfer", inst.clone(), differ(&lattice_poly(&shape, LatticeType::S, 1, 1)?, &want)),
        VerificationReport::check("ribbon_theta", inst.clone(), differ(&super_by_ribbons(&lam, &mu, k, 1, 1)?, &want)),
        VerificationReport::check("tableau_coinv", inst.clone(), differ(&super_by_tableaux(&shape, 1, 1)?, &want)),
    ];
    let boxes = twice_box_values(&lam, &mu, k, 1, 1)?;
    out.push(VerificationReport::check(
        "box_statistic",
        inst.clone(),
        (boxes != [twice_box]).then(|| format!("doubled box values {boxes:?}, expected [{twice_box}]")),
    ));
    if let Some(g) = want_g {
        let g_want = Poly::parse(&vars, g)?;
        out.push(VerificationReport::check("ribbon_g", inst.clone(), differ(&super_ribbon_g(&lam, &mu, k, 1, 1)?, &g_want)));
    }
    out.push(check_l_equals_g(&lam, &mu, k, 1, 1)?);
    Ok(out)
}

fn examples() -> Result<Vec<VerificationReport>, CliError> {
    let mut out = domino_example()?;
    out.extend(triomino_example()?);
    Ok(out)
}

/// `((1),(2))`, the 2-quotient of `(4,2)`.
pub fn domino_example() -> Result<Vec<VerificationReport>, CliError> {
    example("domino", "((1),(2))", &[4, 2], 2, "x1^2*y1 + x1*y1^2 + t*x1^3 + t*x1^2*y1", None, 0)
}

/// `((1),(3),(2))`, the 3-quotient of `(8,7,3)`.
pub fn triomino_example() -> Result<Vec<VerificationReport>, CliError> {
    example(
        "triomino",
        "((1),(3),(2))",
        &[8, 7, 3],
        3,
        "t^3*x1^5*y1 + t^2*x1^4*y1^2 + t^5*x1^6 + t^4*x1^5*y1 + t^3*x1^4*y1^2 + t^2*x1^3*y1^3 + t^5*x1^5*y1 + t^4*x1^4*y1^2",
        Some("t^5*x1^5*y1 + t^3*x1^4*y1^2 + t^9*x1^6 + t^7*x1^5*y1 + t^5*x1^4*y1^2 + t^3*x1^3*y1^3 + t^9*x1^5*y1 + t^7*x1^4*y1^2"),
        1,
    )
}

/// Skew tuples `lam / mu` with `k` components, at most `p` parts of size at
/// most `w`, and at most `max` cells.
fn skew_tuples(k: usize, p: usize, w: u32, max: u32) -> Vec<SkewTuple> {
    let all = tuples_in_box(k, p, w);
    let mut out = Vec::new();
    for lam in &all {
        for mu in &all {
            if !lam.iter().zip(mu).all(|(a, b)| a.contains(b)) {
                continue;
            }
            let size: u32 = lam.iter().zip(mu).map(|(a, b)| a.size() - b.size()).sum();
            if size <= max {
                out.push(SkewTuple::new(lam.clone(), mu.clone()).expect("nested"));
            }
        }
    }
    out
}

fn lattice(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2, 3]) {
        let (p, w, max) = if k == 3 { (1, 2, 4) } else { (2, 2, 4) };
        for shape in skew_tuples(k, p, w, max) {
            for n in 1..=2 {
                let lat = lattice_poly(&shape, LatticeType::W, n, 0)?;
                let tab = coinv_llt(&shape, n);
                out.push(VerificationReport::check("white_lattice", format!("{shape} n={n}"), differ(&lat, &tab)));
            }
        }
    }
    Ok(out)
}

fn main3(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2, 3]) {
        let max = match k {
            1 => 4,
            2 => 3,
            _ => 2,
        };
        let shapes: Vec<SkewTuple> = skew_tuples(k, 3, 3, max).into_iter().filter(|s| s.size() > 0).collect();
        let step = (shapes.len() / 12).max(1);
        for shape in shapes.iter().step_by(step) {
            for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                out.extend(check_main3(shape, n, m)?);
            }
        }
        if k <= 2 {
            for split in Split::all(k, 1, 1, 1, 1) {
                out.push(check_factorization(&split, 1, 1)?);
                out.push(check_eta_split(&split, 1, 1)?);
                out.push(check_general_cancel(&split, 1, 1)?);
            }
            for split in Split::all(k, 1, 2, 1, 1) {
                out.push(check_factorization(&split, 1, 2)?);
            }
        }
    }
    let lam = [3, 1, 0];
    for nu in [[3, 1, 0], [3, 0, 1], [1, 3, 0], [1, 0, 3], [0, 3, 1], [0, 1, 3]] {
        out.push(check_single_row_swap(&lam, &nu, 1, 1)?);
    }
    out.push(check_single_row_swap(&[2, 1], &[1, 2], 1, 1)?);
    Ok(out)
}

/// Tuples of `k` partitions with at most `max` cells in total.
fn small_tuples(k: usize, max: u32) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            let used: u32 = t.iter().map(Partition::size).sum();
            for s in 0..=max - used {
                for p in partitions_of(s) {
                    let mut t2 = t.clone();
                    t2.push(p);
                    next.push(t2);
                }
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|t| {
            let p = t.iter().map(Partition::len).max().unwrap_or(0);
            t.iter().map(|x| x.with_len(p).expect("longer")).collect()
        })
        .collect()
}

fn g_suite(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2, 3]) {
        for lam in small_tuples(k, 6) {
            out.push(check_g_chains(&lam)?);
            out.push(check_g_conjugate(&lam)?);
        }
        if k <= 2 {
            for lam in tuples_in_box(k, 2, 2) {
                for mu in strips_below(&lam) {
                    out.push(check_strip_duality(&SkewTuple::new(lam.clone(), mu)?)?);
                }
            }
            for shape in skew_tuples(k, 2, 2, 3) {
                out.push(check_xy_swap(&shape, 1, 1)?);
                out.push(check_xy_swap(&shape, 2, 1)?);
            }
        }
        out.push(check_cancellation_flip(k));
        out.push(check_corner_flip(k));
    }
    Ok(out)
}

/// Ribbon-tileable skew shapes `lam / mu` with `|lam/mu| <= max` cells,
/// `lam` of size at most `max_lam`.
fn ribbon_shapes(k: usize, max: u32, max_lam: u32) -> Vec<(Partition, Partition)> {
    let all: Vec<Partition> = (0..=max_lam).flat_map(partitions_of).collect();
    let mut out = Vec::new();
    for lam in &all {
        for mu in &all {
            let p = lam.len().max(mu.len());
            let (Ok(l), Ok(m)) = (lam.with_len(p), mu.with_len(p)) else { continue };
            if !l.contains(&m) {
                continue;
            }
            let d = l.size() - m.size();
            if d > 0 && d <= max && (d as usize).is_multiple_of(k) {
                out.push((l, m));
            }
        }
    }
    out
}

fn box_suite(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    let mut picked = Vec::new();
    for k in opts.ks(&[2, 3]) {
        let pool: Vec<_> =
            ribbon_shapes(k, 9, 9).into_iter().filter(|(l, m)| aligned_k_quotient(l, m, k).is_ok()).collect();
        picked.extend(pool.choose_multiple(&mut rng, 5).cloned().map(|(l, m)| (l, m, k)));
    }
    for (lam, mu, k) in picked {
        out.push(check_l_equals_g(&lam, &mu, k, 1, 1)?);
        if lam.size() - mu.size() <= 6 {
            out.push(check_l_equals_g(&lam, &mu, k, 2, 1)?);
        }
    }
    Ok(out)
}

fn star(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2]) {
        let ms: &[usize] = if k == 1 { &[1, 2] } else { &[1] };
        let small: Vec<_> = tuples_in_box(k, 2, 2).into_iter().filter(|t| t.iter().map(Partition::size).sum::<u32>() <= 3).collect();
        for lam in &small {
            for mu in &small {
                if !lam.iter().zip(mu).all(|(a, b)| a.contains(b)) {
                    continue;
                }
                for &m in ms {
                    out.extend(check_star_stability(lam, mu, m)?);
                }
            }
        }
    }
    Ok(out)
}

fn other_forms(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2, 3]) {
        for (lam, mu) in ribbon_shapes(k, 4, 6) {
            if aligned_k_quotient(&lam, &mu, k).is_err() || enum_srt(&lam, &mu, k, 1, 0)?.is_empty() {
                continue;
            }
            out.extend(check_other_forms(&lam, &mu, k, 2)?);
        }
    }
    Ok(out)
}

fn bijection(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2, 3]) {
        for (lam, mu) in ribbon_shapes(k, 9, 12) {
            out.push(check_bijections(&lam, &mu, k, 1, 1)?);
            let single = enum_srt(&lam, &mu, k, 1, 0)?;
            if single.is_empty() {
                continue;
            }
            out.push(check_theta_commutes(&lam, &mu, k)?);
            if single.len() == 1 && single[0].ribbons().len() == 1 {
                out.push(check_content_transport(&lam, &mu, k)?);
            }
        }
    }
    Ok(out)
}

fn cauchy(opts: &SuiteOpts) -> Result<Vec<VerificationReport>, CliError> {
    let degree = opts.degree.unwrap_or(3);
    let mut out = Vec::new();
    for k in opts.ks(&[1, 2]) {
        let small = tuples_in_box(k, 1, 1);
        for which in Cauchy::ALL {
            for mu in &small {
                for nu in &small {
                    out.push(check_cauchy(which, mu, nu, VarCounts::ONE, degree)?);
                }
            }
        }
    }
    Ok(out)
}
