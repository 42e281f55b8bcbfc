use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ShapeError;

/// Weakly decreasing list of nonnegative parts with an explicit length.
/// Trailing zeros count: `(2,1)` and `(2,1,0)` are different values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn zeros(p: usize) -> Partition {
        Partition { parts: vec![0; p] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts including zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Part `r`, 1-based; rows past the end read as 0.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return u32::MAX;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().filter(|&&x| x > 0).count()
    }

    /// Pads with zeros (or drops trailing zeros) to exactly `p` parts.
    pub fn with_len(&self, p: usize) -> Result<Partition, ShapeError> {
        if self.length() > p {
            return Err(ShapeError::TooManyParts { have: self.length(), want: p });
        }
        let mut parts = self.parts.clone();
        parts.resize(p, 0);
        Ok(Partition { parts })
    }

    /// Conjugate with exactly `n` parts; needs `n >= largest()`.
    pub fn conjugate(&self, n: usize) -> Result<Partition, ShapeError> {
        if (self.largest() as usize) > n {
            return Err(ShapeError::TooManyParts { have: self.largest() as usize, want: n });
        }
        let parts = (1..=n as u32)
            .map(|c| self.parts.iter().filter(|&&x| x >= c).count() as u32)
            .collect();
        Ok(Partition { parts })
    }

    pub fn contains(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|r| self.part(r) >= other.part(r))
    }

    /// Cells `(row, col)`, 1-based, with row 1 the longest row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (i, &x) in self.parts.iter().enumerate() {
            for c in 1..=x as usize {
                v.push((i + 1, c));
            }
        }
        v
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && (self.part(row) as usize) >= col
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `lam / mu` is a horizontal strip: at most one cell per column.
pub fn is_horizontal_strip(lam: &Partition, mu: &Partition) -> bool {
    let n = lam.len().max(mu.len());
    lam.contains(mu) && (2..=n).all(|r| lam.part(r) <= mu.part(r - 1))
}

/// `lam / mu` is a vertical strip: at most one cell per row.
pub fn is_vertical_strip(lam: &Partition, mu: &Partition) -> bool {
    let n = lam.len().max(mu.len());
    lam.contains(mu) && (1..=n).all(|r| lam.part(r) <= mu.part(r) + 1)
}

/// All partitions with exactly `p` parts, each at most `max_part`, in
/// lexicographic order.
pub fn partitions_in_box(p: usize, max_part: u32) -> Vec<Partition> {
    fn rec(p: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == p {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in 0..=bound {
            cur.push(x);
            rec(p, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` (no zero parts), in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=bound.min(n)).rev() {
            cur.push(x);
            rec(n - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
