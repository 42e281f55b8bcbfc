use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{is_horizontal_strip, is_vertical_strip, partitions_in_box, Partition};
use crate::ShapeError;

/// A cell of a tuple of skew shapes. `shape` is 0-based, `row` and `col`
/// are 1-based with row 1 the longest row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub shape: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// `k` skew partitions `lam[i] / mu[i]`, all with the same part count `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewTuple {
    lam: Vec<Partition>,
    mu: Vec<Partition>,
}

impl SkewTuple {
    pub fn new(lam: Vec<Partition>, mu: Vec<Partition>) -> Result<SkewTuple, ShapeError> {
        if lam.len() != mu.len() {
            return Err(ShapeError::TupleArity(lam.len(), mu.len()));
        }
        let p = lam.first().map(|x| x.len()).unwrap_or(0);
        if lam.iter().chain(&mu).any(|x| x.len() != p) {
            return Err(ShapeError::PartCount);
        }
        if lam.iter().zip(&mu).any(|(a, b)| !a.contains(b)) {
            return Err(ShapeError::NotContained);
        }
        Ok(SkewTuple { lam, mu })
    }

    /// `lam / 0`.
    pub fn straight(lam: Vec<Partition>) -> Result<SkewTuple, ShapeError> {
        let mu = lam.iter().map(|x| Partition::zeros(x.len())).collect();
        SkewTuple::new(lam, mu)
    }

    /// Pads every component to a common part count, then builds the tuple.
    pub fn padded(lam: Vec<Partition>, mu: Vec<Partition>) -> Result<SkewTuple, ShapeError> {
        let p = lam.iter().chain(&mu).map(|x| x.len()).max().unwrap_or(0);
        let pad = |v: Vec<Partition>| v.iter().map(|x| x.with_len(p)).collect::<Result<Vec<_>, _>>();
        SkewTuple::new(pad(lam)?, pad(mu)?)
    }

    pub fn lam(&self) -> &[Partition] {
        &self.lam
    }

    pub fn mu(&self) -> &[Partition] {
        &self.mu
    }

    pub fn k(&self) -> usize {
        self.lam.len()
    }

    pub fn p(&self) -> usize {
        self.lam.first().map(|x| x.len()).unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.lam.iter().map(|x| x.size()).sum::<u32>() - self.mu.iter().map(|x| x.size()).sum::<u32>()
    }

    /// Largest part over all of `lam` and `mu`.
    pub fn max_part(&self) -> u32 {
        self.lam.iter().chain(&self.mu).map(|x| x.largest()).max().unwrap_or(0)
    }

    /// Cells ordered by shape, then row, then column.
    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::new();
        for (i, (l, m)) in self.lam.iter().zip(&self.mu).enumerate() {
            for r in 1..=l.len() {
                for c in m.part(r) as usize + 1..=l.part(r) as usize {
                    v.push(Cell { shape: i, row: r, col: c });
                }
            }
        }
        v
    }

    pub fn contains_cell(&self, shape: usize, row: usize, col: usize) -> bool {
        row >= 1
            && row <= self.p()
            && col > self.mu[shape].part(row) as usize
            && col <= self.lam[shape].part(row) as usize
    }

    pub fn is_horizontal_strip(&self) -> bool {
        self.lam.iter().zip(&self.mu).all(|(l, m)| is_horizontal_strip(l, m))
    }

    pub fn is_vertical_strip(&self) -> bool {
        self.lam.iter().zip(&self.mu).all(|(l, m)| is_vertical_strip(l, m))
    }

    /// Reverses the color order and conjugates each component with `n` parts.
    pub fn conjugate(&self, n: usize) -> Result<SkewTuple, ShapeError> {
        SkewTuple::new(conjugate_tuple(&self.lam, n)?, conjugate_tuple(&self.mu, n)?)
    }

    /// [`SkewTuple::conjugate`] with `n` the largest part.
    pub fn conjugate_default(&self) -> SkewTuple {
        self.conjugate(self.max_part() as usize).expect("largest part fits")
    }

    /// Same shapes with `extra` zero parts appended to every component.
    pub fn pad_rows(&self, extra: usize) -> SkewTuple {
        let p = self.p() + extra;
        let pad = |v: &[Partition]| v.iter().map(|x| x.with_len(p).expect("padding")).collect();
        SkewTuple { lam: pad(&self.lam), mu: pad(&self.mu) }
    }
}

impl fmt::Display for SkewTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", TupleDisplay(&self.lam))?;
        if self.mu.iter().any(|m| m.size() > 0) {
            write!(f, " / {}", TupleDisplay(&self.mu))?;
        }
        Ok(())
    }
}

/// Displays a tuple of partitions as `((4,3),(1,0))`.
pub struct TupleDisplay<'a>(pub &'a [Partition]);

impl fmt::Display for TupleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(conj lam[k-1], ..., conj lam[0])`, each with `n` parts.
pub fn conjugate_tuple(t: &[Partition], n: usize) -> Result<Vec<Partition>, ShapeError> {
    t.iter().rev().map(|x| x.conjugate(n)).collect()
}

/// Complements every component in the `l1 x l2` box and reverses the order.
pub fn complement(t: &[Partition], l1: usize, l2: u32) -> Result<Vec<Partition>, ShapeError> {
    t.iter()
        .rev()
        .map(|x| {
            if x.length() > l1 || x.largest() > l2 {
                return Err(ShapeError::BoxTooSmall);
            }
            let x = x.with_len(l1)?;
            Partition::new(x.parts().iter().rev().map(|y| l2 - y).collect())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// Limits for [`strip_extensions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripBounds {
    /// Largest allowed part of the extension.
    pub max_part: u32,
    /// Largest number of cells added to a single component.
    pub max_added: u32,
}

/// Every tuple `lam` with the same part count as `mu` such that each
/// `lam[i] / mu[i]` is a strip of the given kind within the bounds.
pub fn strip_extensions(mu: &[Partition], kind: StripKind, bounds: StripBounds) -> Vec<Vec<Partition>> {
    let per: Vec<Vec<Partition>> = mu
        .iter()
        .map(|m| {
            partitions_in_box(m.len(), bounds.max_part)
                .into_iter()
                .filter(|l| {
                    let ok = match kind {
                        StripKind::Horizontal => is_horizontal_strip(l, m),
                        StripKind::Vertical => is_vertical_strip(l, m),
                    };
                    ok && l.size() - m.size() <= bounds.max_added
                })
                .collect()
        })
        .collect();
    cartesian(&per)
}

/// All `k`-tuples of partitions with `p` parts each at most `max_part`.
pub fn tuples_in_box(k: usize, p: usize, max_part: u32) -> Vec<Vec<Partition>> {
    let one = partitions_in_box(p, max_part);
    cartesian(&vec![one; k])
}

pub(crate) fn cartesian(per: &[Vec<Partition>]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for choices in per {
        let mut next = Vec::new();
        for prefix in &out {
            for c in choices {
                let mut v = prefix.clone();
                v.push(c.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}
