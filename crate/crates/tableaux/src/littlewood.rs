use llt_shapes::{
    charged_quotient, deinterleave, from_maya, from_quotient, maya, skew_k_quotient, Cell,
    Partition, SkewTuple,
};

use crate::label::SuperLabel;
use crate::ribbon::{head_on_south, ribbon_tilings, tail_on_west, Ribbon};
use crate::srt::RibbonTableau;
use crate::tableau::SuperTableau;
use crate::TableauError;

/// Quotient components of `nu` read from a Maya diagram of length `r`,
/// padded with zero parts to `p` parts.
fn quotient_at(nu: &Partition, r: usize, k: usize, p: usize) -> Result<Vec<Partition>, TableauError> {
    deinterleave(&maya(nu, r)?, k)
        .iter()
        .map(|m| Ok(from_maya(m).with_len(p)?))
        .collect()
}

/// Cells of `outer` missing from `inner`, componentwise.
fn new_cells(inner: &[Partition], outer: &[Partition]) -> Result<Vec<Cell>, TableauError> {
    let mut out = Vec::new();
    for (j, (a, b)) in inner.iter().zip(outer).enumerate() {
        if !b.contains(a) {
            return Err(TableauError::InvalidRibbons("quotient chain is not increasing".into()));
        }
        for r in 1..=b.len() {
            for c in a.part(r) as usize + 1..=b.part(r) as usize {
                out.push(Cell { shape: j, row: r, col: c });
            }
        }
    }
    Ok(out)
}

struct Frame {
    shape: SkewTuple,
    maya_len: usize,
    charges: Vec<usize>,
}

fn frame(lam: &Partition, mu: &Partition, k: usize) -> Result<Frame, TableauError> {
    let q = charged_quotient(lam, mu, k)?;
    Ok(Frame { shape: skew_k_quotient(lam, mu, k)?, maya_len: q.maya_len, charges: q.charges })
}

/// The Littlewood quotient map: label `i` fills the cells of the quotient of
/// `lam_{<=i} / lam_{<i}`. The image lives on `skew_k_quotient(lam, mu, k)`.
pub fn littlewood_map(t: &RibbonTableau) -> Result<SuperTableau, TableauError> {
    let k = t.k();
    let f = frame(t.lam(), t.mu(), k)?;
    let p = f.shape.p();
    let mut prev = quotient_at(t.mu(), f.maya_len, k, p)?;
    let mut labels: Vec<SuperLabel> = t.labels();
    labels.dedup();
    let mut pairs = Vec::new();
    for l in labels {
        let q = quotient_at(&t.shape_upto(Some(l)), f.maya_len, k, p)?;
        pairs.extend(new_cells(&prev, &q)?.into_iter().map(|c| (c, l)));
        prev = q;
    }
    SuperTableau::from_pairs(f.shape, pairs)
}

/// The quotient cell of each ribbon of `t`, parallel to `t.ribbons()`.
/// Ribbons of one label are added one at a time in an order that keeps the
/// shape a partition.
pub fn ribbon_cells(t: &RibbonTableau) -> Result<Vec<Cell>, TableauError> {
    let k = t.k();
    let f = frame(t.lam(), t.mu(), k)?;
    let p = f.shape.p();
    let mut cur = t.mu().clone();
    let mut out = vec![None; t.ribbons().len()];
    let mut pending: Vec<usize> = (0..t.ribbons().len()).collect();
    while !pending.is_empty() {
        let label = t.ribbons()[pending[0]].1;
        let pos = pending
            .iter()
            .position(|&i| {
                t.ribbons()[i].1 == label && add_ribbon(&cur, &t.ribbons()[i].0).is_some()
            })
            .ok_or_else(|| TableauError::InvalidRibbons("no addable ribbon".into()))?;
        let i = pending.remove(pos);
        let next = add_ribbon(&cur, &t.ribbons()[i].0).expect("checked");
        let cells = new_cells(
            &quotient_at(&cur, f.maya_len, k, p)?,
            &quotient_at(&next, f.maya_len, k, p)?,
        )?;
        if cells.len() != 1 {
            return Err(TableauError::InvalidRibbons("ribbon is not one quotient cell".into()));
        }
        out[i] = Some(cells[0]);
        cur = next;
    }
    Ok(out.into_iter().map(|c| c.expect("all placed")).collect())
}

fn add_ribbon(cur: &Partition, rib: &Ribbon) -> Option<Partition> {
    let mut parts = cur.parts().to_vec();
    for &(r, c) in rib.cells() {
        let row = parts.get_mut(r - 1)?;
        if *row as usize + 1 != c {
            return None;
        }
        *row += 1;
    }
    Partition::new(parts).ok()
}

/// Inverse of [`littlewood_map`] for tableaux on the quotient of `lam / mu`.
pub fn littlewood_inverse(
    tab: &SuperTableau,
    lam: &Partition,
    mu: &Partition,
    k: usize,
) -> Result<RibbonTableau, TableauError> {
    let f = frame(lam, mu, k)?;
    if tab.shape() != &f.shape {
        return Err(TableauError::InvalidFilling("tableau is not on the quotient shape".into()));
    }
    let p = lam.len().max(mu.len());
    let mu_p = mu.with_len(p)?;
    let mut labels: Vec<SuperLabel> = tab.labels().to_vec();
    labels.sort();
    labels.dedup();
    let mut cur = mu_p.clone();
    let mut ribbons = Vec::new();
    for l in labels {
        let classes: Vec<Partition> = f
            .shape
            .mu()
            .iter()
            .enumerate()
            .map(|(j, m)| {
                let parts = (1..=f.charges[j])
                    .map(|r| {
                        let filled = tab
                            .entries()
                            .filter(|(c, x)| c.shape == j && c.row == r && *x <= l)
                            .count() as u32;
                        m.part(r) + filled
                    })
                    .collect();
                Partition::new(parts)
            })
            .collect::<Result<_, _>>()?;
        let next = from_quotient(&classes, f.maya_len / k)?.with_len(p)?;
        let tilings = if l.primed {
            ribbon_tilings(&next, &cur, k, &|r| tail_on_west(r, &cur))
        } else {
            ribbon_tilings(&next, &cur, k, &|r| head_on_south(r, &cur))
        };
        let tiling = tilings.into_iter().next().ok_or(TableauError::NotTileable)?;
        ribbons.extend(tiling.into_iter().map(|r| (r, l)));
        cur = next;
    }
    RibbonTableau::new(lam.clone(), mu_p, k, ribbons)
}
