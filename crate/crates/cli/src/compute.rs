use llt_algebra::{Poly, VarSet};
use llt_lattice::{
    box_statistic, coinv_stats, config_weight, configurations, partition_function, quotient_lattice, tableau_to_config,
    theta, LatticeSpec,
};
use llt_shapes::{Partition, SkewTuple};
use llt_tableaux::{enum_srt, enum_sssyt};

use crate::CliError;

/// Which lattice to sum over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeType {
    W,
    P,
    S,
}

impl std::str::FromStr for LatticeType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "W" | "w" => Ok(LatticeType::W),
            "P" | "p" => Ok(LatticeType::P),
            "S" | "s" => Ok(LatticeType::S),
            _ => Err(format!("unknown lattice type `{s}` (expected W, P or S)")),
        }
    }
}

pub fn lattice_spec(shape: &SkewTuple, ty: LatticeType, n: usize, m: usize) -> Result<LatticeSpec, CliError> {
    Ok(match ty {
        LatticeType::W => LatticeSpec::white(shape, n)?,
        LatticeType::P => LatticeSpec::purple(shape, n)?,
        LatticeType::S => LatticeSpec::supersymmetric(shape, n, m)?,
    })
}

pub fn lattice_poly(shape: &SkewTuple, ty: LatticeType, n: usize, m: usize) -> Result<Poly, CliError> {
    let vars = VarSet::families(n, if ty == LatticeType::S { m } else { 0 }, 0, 0, &[]);
    Ok(partition_function(&lattice_spec(shape, ty, n, m)?, &vars)?)
}

/// `L^S` by enumerating super tableaux of `shape` and weighting each by
/// `t^(coinv + coinv')` of its lattice configuration.
pub fn super_by_tableaux(shape: &SkewTuple, n: usize, m: usize) -> Result<Poly, CliError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let spec = LatticeSpec::supersymmetric(shape, n, m)?;
    let mut acc = Poly::zero(&vars);
    for t in enum_sssyt(shape, n, m) {
        let cfg = tableau_to_config(&t, &spec, n, m)?;
        let (a, b) = coinv_stats(&spec, &cfg);
        let mono = t.monomial(&vars)?;
        acc = &acc + &(&mono * &Poly::t_pow(&vars, (a + b) as i32));
    }
    Ok(acc)
}

/// `L^S` of the k-quotient of `lam / mu`, by pushing every super ribbon
/// tableau through `theta` and summing configuration weights.
pub fn super_by_ribbons(lam: &Partition, mu: &Partition, k: usize, n: usize, m: usize) -> Result<Poly, CliError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let mut acc = Poly::zero(&vars);
    for t in enum_srt(lam, mu, k, n, m)? {
        let (spec, cfg) = theta(&t, n, m)?;
        acc = &acc + &config_weight(&spec, &cfg, &vars)?;
    }
    Ok(acc)
}

/// The box statistic, doubled, on every configuration of the quotient
/// lattice of `lam / mu`; `None` when there are none.
pub fn twice_box_values(lam: &Partition, mu: &Partition, k: usize, n: usize, m: usize) -> Result<Vec<i64>, CliError> {
    let (_, spec) = quotient_lattice(lam, mu, k, n, m)?;
    let mut v: Vec<i64> = configurations(&spec).iter().map(|c| box_statistic(&spec, c)).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

/// Half-integer from its double.
pub fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}
