use std::fmt;

use crate::partition::Partition;
use crate::tuple::SkewTuple;
use crate::ShapeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    S,
}

/// East/South steps along the boundary of a partition, read from the
/// north-west end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    pub steps: Vec<Step>,
}

impl MayaDiagram {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Positions of the S steps, increasing.
    pub fn south_positions(&self) -> Vec<usize> {
        self.steps.iter().enumerate().filter(|(_, &s)| s == Step::S).map(|(i, _)| i).collect()
    }

    pub fn parse(s: &str) -> Result<MayaDiagram, ShapeError> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' => Ok(Step::E),
                'S' => Ok(Step::S),
                _ => Err(ShapeError::Parse(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(MayaDiagram { steps })
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::E { 'E' } else { 'S' })?;
        }
        Ok(())
    }
}

/// Maya diagram of length `r`; row `j` contributes the S step at position
/// `lambda_j + p - j` (0-based).
pub fn maya(p: &Partition, r: usize) -> Result<MayaDiagram, ShapeError> {
    let len = p.len();
    let need = len + p.largest() as usize;
    if r < need {
        return Err(ShapeError::MayaTooShort { need, got: r });
    }
    let mut steps = vec![Step::E; r];
    for j in 1..=len {
        steps[p.part(j) as usize + len - j] = Step::S;
    }
    Ok(MayaDiagram { steps })
}

/// Partition with one part per S step.
pub fn from_maya(m: &MayaDiagram) -> Partition {
    let pos = m.south_positions();
    let l = pos.len();
    let parts = pos.iter().rev().enumerate().map(|(j, &q)| (q - (l - 1 - j)) as u32).collect();
    Partition::new(parts).expect("maya positions give a partition")
}

fn round_up(x: usize, k: usize) -> usize {
    x.div_ceil(k) * k
}

/// Splits a Maya diagram into its `k` residue classes.
pub fn deinterleave(m: &MayaDiagram, k: usize) -> Vec<MayaDiagram> {
    (0..k)
        .map(|i| MayaDiagram { steps: m.steps.iter().skip(i).step_by(k).copied().collect() })
        .collect()
}

/// Inverse of [`deinterleave`]; all classes must have the same length.
pub fn interleave(classes: &[MayaDiagram]) -> MayaDiagram {
    let k = classes.len();
    let s = classes.first().map(|c| c.len()).unwrap_or(0);
    let mut steps = Vec::with_capacity(k * s);
    for l in 0..s {
        for c in classes {
            steps.push(c.steps[l]);
        }
    }
    MayaDiagram { steps }
}

/// The `k`-quotient of a partition. Component `i` has as many parts as
/// there are S steps in residue class `i`.
pub fn k_quotient(p: &Partition, k: usize) -> Vec<Partition> {
    let r = round_up(p.len() + p.largest() as usize, k);
    let m = maya(p, r).expect("length is large enough");
    deinterleave(&m, k).iter().map(from_maya).collect()
}

/// Quotient of a skew shape with the part count (charge) of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedQuotient {
    pub lam: Vec<Partition>,
    pub mu: Vec<Partition>,
    pub charges: Vec<usize>,
    /// Maya length used, a multiple of `k`.
    pub maya_len: usize,
}

/// Quotients of `lam` and `mu` read off Maya diagrams of a common length.
/// Both are padded with zero parts to a common part count first.
pub fn charged_quotient(
    lam: &Partition,
    mu: &Partition,
    k: usize,
) -> Result<ChargedQuotient, ShapeError> {
    if k == 0 {
        return Err(ShapeError::ZeroK);
    }
    let p = lam.len().max(mu.len());
    let lam = lam.with_len(p)?;
    let mu = mu.with_len(p)?;
    if !lam.contains(&mu) {
        return Err(ShapeError::NotContained);
    }
    let r = round_up(p + lam.largest() as usize, k);
    let lq: Vec<Partition> = deinterleave(&maya(&lam, r)?, k).iter().map(from_maya).collect();
    let mq: Vec<Partition> = deinterleave(&maya(&mu, r)?, k).iter().map(from_maya).collect();
    let charges: Vec<usize> = lq.iter().map(|x| x.len()).collect();
    if mq.iter().map(|x| x.len()).collect::<Vec<_>>() != charges {
        return Err(ShapeError::ChargeMismatch);
    }
    Ok(ChargedQuotient { lam: lq, mu: mq, charges, maya_len: r })
}

/// The `k`-quotient of `lam / mu` as a tuple with a common part count; each
/// component is padded with zero parts.
pub fn skew_k_quotient(lam: &Partition, mu: &Partition, k: usize) -> Result<SkewTuple, ShapeError> {
    let q = charged_quotient(lam, mu, k)?;
    let p = q.charges.iter().copied().max().unwrap_or(0);
    let pad = |v: &[Partition]| v.iter().map(|x| x.with_len(p)).collect::<Result<Vec<_>, _>>();
    SkewTuple::new(pad(&q.lam)?, pad(&q.mu)?)
}

/// The `k`-quotient with components aligned on a common content line: a
/// component with charge `c` has every part raised by `c - min charge` and is
/// padded with parts equal to that shift. Boundary column of a step then
/// depends only on its Maya position.
pub fn aligned_k_quotient(
    lam: &Partition,
    mu: &Partition,
    k: usize,
) -> Result<SkewTuple, ShapeError> {
    let q = charged_quotient(lam, mu, k)?;
    let p = q.charges.iter().copied().max().unwrap_or(0);
    let lo = q.charges.iter().copied().min().unwrap_or(0);
    let shift = |v: &[Partition]| -> Result<Vec<Partition>, ShapeError> {
        v.iter()
            .zip(&q.charges)
            .map(|(x, &c)| {
                let s = (c - lo) as u32;
                let mut parts: Vec<u32> = x.parts().iter().map(|y| y + s).collect();
                parts.resize(p, s);
                Partition::new(parts)
            })
            .collect()
    };
    SkewTuple::new(shift(&q.lam)?, shift(&q.mu)?)
}

/// Rebuilds a partition from quotient components with the given charges and
/// class Maya length `s` (total Maya length `k * s`).
pub fn from_quotient(classes: &[Partition], s: usize) -> Result<Partition, ShapeError> {
    let ms = classes.iter().map(|c| maya(c, s)).collect::<Result<Vec<_>, _>>()?;
    Ok(from_maya(&interleave(&ms)))
}
