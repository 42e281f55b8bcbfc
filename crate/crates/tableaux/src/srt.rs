use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use llt_algebra::{BigInt, Exps, Poly, VarSet};
use llt_shapes::Partition;
use serde::Serialize;

use crate::label::{alphabet, SuperLabel};
use crate::ribbon::{head_on_south, ribbon_tilings, tail_on_west, Ribbon};
use crate::tableau::{label_exps, label_weight};
use crate::TableauError;

/// A super `k`-ribbon tableau of shape `lam / mu`. Ribbons are sorted by
/// label, then by cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RibbonTableau {
    lam: Partition,
    mu: Partition,
    k: usize,
    ribbons: Vec<(Ribbon, SuperLabel)>,
}

fn union_shape(base: &Partition, ribbons: &[&Ribbon]) -> Option<Partition> {
    let mut parts: Vec<u32> = base.parts().to_vec();
    let mut cells: Vec<(usize, usize)> = ribbons.iter().flat_map(|r| r.cells().iter().copied()).collect();
    cells.sort_unstable();
    for (r, c) in cells {
        let row = parts.get_mut(r - 1)?;
        if *row as usize + 1 != c {
            return None;
        }
        *row += 1;
    }
    Partition::new(parts).ok()
}

impl RibbonTableau {
    /// Checks the tiling and the strip conditions label by label.
    pub fn new(
        lam: Partition,
        mu: Partition,
        k: usize,
        mut ribbons: Vec<(Ribbon, SuperLabel)>,
    ) -> Result<RibbonTableau, TableauError> {
        let p = lam.len().max(mu.len());
        let lam = lam.with_len(p)?;
        let mu = mu.with_len(p)?;
        ribbons.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        let bad = |s: &str| TableauError::InvalidRibbons(s.to_string());
        if ribbons.iter().any(|(r, _)| r.len() != k) {
            return Err(bad("ribbon of the wrong size"));
        }
        let mut cur = mu.clone();
        let mut i = 0;
        while i < ribbons.len() {
            let label = ribbons[i].1;
            let group: Vec<&Ribbon> =
                ribbons[i..].iter().take_while(|x| x.1 == label).map(|x| &x.0).collect();
            let next = union_shape(&cur, &group).ok_or_else(|| bad("prefix is not a partition"))?;
            if !lam.contains(&next) {
                return Err(bad("ribbon outside the shape"));
            }
            let ok = group.iter().all(|r| {
                if label.primed {
                    tail_on_west(r, &cur)
                } else {
                    head_on_south(r, &cur)
                }
            });
            if !ok {
                return Err(bad("label class is not a ribbon strip"));
            }
            i += group.len();
            cur = next;
        }
        if cur != lam {
            return Err(bad("ribbons do not cover the shape"));
        }
        Ok(RibbonTableau { lam, mu, k, ribbons })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ribbons(&self) -> &[(Ribbon, SuperLabel)] {
        &self.ribbons
    }

    /// Sum of `height - 1` over ribbons.
    pub fn spin(&self) -> usize {
        self.ribbons.iter().map(|(r, _)| r.height() - 1).sum()
    }

    pub fn labels(&self) -> Vec<SuperLabel> {
        self.ribbons.iter().map(|x| x.1).collect()
    }

    pub fn weight(&self, n: usize, m: usize) -> (Vec<u32>, Vec<u32>) {
        label_weight(&self.labels(), n, m)
    }

    /// `t^spin x^weight y^weight'` over `vars`.
    pub fn monomial(&self, vars: &Arc<VarSet>) -> Result<Poly, TableauError> {
        Ok(Poly::monomial(vars, 1, label_exps(vars, &self.labels(), self.spin() as i32)?))
    }

    /// The shape after adding every ribbon with label at most `label`.
    pub fn shape_upto(&self, label: Option<SuperLabel>) -> Partition {
        let group: Vec<&Ribbon> = self
            .ribbons
            .iter()
            .filter(|x| label.is_some_and(|l| x.1 <= l))
            .map(|x| &x.0)
            .collect();
        union_shape(&self.mu, &group).expect("validated tableau")
    }

    /// Label of the ribbon covering `cell`, if any.
    pub fn label_at(&self, cell: (usize, usize)) -> Option<SuperLabel> {
        self.ribbons.iter().find(|(r, _)| r.contains(cell)).map(|x| x.1)
    }
}

impl fmt::Display for RibbonTableau {
    /// Rows from the top down, each cell showing its ribbon's label and
    /// `#` for the inner shape. Ribbons are listed after the grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (1..=self.lam.len()).rev() {
            let mut row = Vec::new();
            for c in 1..=self.lam.part(r) as usize {
                if c <= self.mu.part(r) as usize {
                    row.push("#".to_string());
                } else {
                    row.push(self.label_at((r, c)).map_or("?".into(), |l| l.to_string()));
                }
            }
            if !row.is_empty() {
                writeln!(f, "{}", row.iter().map(|s| format!("{s:>3}")).collect::<String>())?;
            }
        }
        Ok(())
    }
}

/// Partitions `nu` with `lo <= nu <= hi` part by part.
fn between(lo: &Partition, hi: &Partition) -> Vec<Partition> {
    fn rec(lo: &[u32], hi: &[u32], bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == lo.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for x in lo[i]..=hi[i].min(bound) {
            cur.push(x);
            rec(lo, hi, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lo.parts(), hi.parts(), u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Strips of label `label` from `cur` inside `lam`: pairs of the new shape
/// and one strip tiling.
fn strips(cur: &Partition, lam: &Partition, k: usize, primed: bool) -> Vec<(Partition, Vec<Ribbon>)> {
    let mut out = Vec::new();
    for next in between(cur, lam) {
        if !((next.size() - cur.size()) as usize).is_multiple_of(k) {
            continue;
        }
        let tilings = if primed {
            ribbon_tilings(&next, cur, k, &|r| tail_on_west(r, cur))
        } else {
            ribbon_tilings(&next, cur, k, &|r| head_on_south(r, cur))
        };
        for t in tilings {
            out.push((next.clone(), t));
        }
    }
    out
}

/// Every super `k`-ribbon tableau of `lam / mu` in `1..n, 1'..m'`, built as
/// chains of ribbon strips. Empty when `k` does not divide the size.
pub fn enum_srt(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<Vec<RibbonTableau>, TableauError> {
    let p = lam.len().max(mu.len());
    let lam = lam.with_len(p)?;
    let mu = mu.with_len(p)?;
    if !lam.contains(&mu) {
        return Err(llt_shapes::ShapeError::NotContained.into());
    }
    let mut out = Vec::new();
    if k == 0 || !((lam.size() - mu.size()) as usize).is_multiple_of(k) {
        return Ok(out);
    }
    let alpha = alphabet(n, m);
    fn rec(
        lam: &Partition,
        mu: &Partition,
        k: usize,
        alpha: &[SuperLabel],
        cur: &Partition,
        acc: &mut Vec<(Ribbon, SuperLabel)>,
        out: &mut Vec<RibbonTableau>,
    ) {
        let Some((&label, rest)) = alpha.split_first() else {
            if cur == lam {
                let mut ribbons = acc.clone();
                ribbons.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
                out.push(RibbonTableau { lam: lam.clone(), mu: mu.clone(), k, ribbons });
            }
            return;
        };
        for (next, tiling) in strips(cur, lam, k, label.primed) {
            let len = acc.len();
            acc.extend(tiling.into_iter().map(|r| (r, label)));
            rec(lam, mu, k, rest, &next, acc, out);
            acc.truncate(len);
        }
    }
    rec(&lam, &mu, k, &alpha, &mu, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The super `k`-ribbon function of `lam / mu` in `x1..xn`, `y1..ym`, `t`.
pub fn super_ribbon_g(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<Poly, TableauError> {
    let vars = VarSet::families(n, m, 0, 0, &[]);
    let mut acc: BTreeMap<Exps, i64> = BTreeMap::new();
    for t in enum_srt(lam, mu, k, n, m)? {
        *acc.entry(label_exps(&vars, &t.labels(), t.spin() as i32)?).or_default() += 1;
    }
    Ok(Poly::from_terms(&vars, acc.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}
