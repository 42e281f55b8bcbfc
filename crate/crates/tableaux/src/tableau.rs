use std::fmt;
use std::sync::Arc;

use llt_algebra::{Exps, Poly, VarSet};
use llt_shapes::{Cell, SkewTuple};
use serde::Serialize;

use crate::label::{alphabet, SuperLabel};
use crate::TableauError;

/// A semistandard super tableau on a tuple of skew shapes. Entries are kept
/// parallel to `shape.cells()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SuperTableau {
    shape: SkewTuple,
    cells: Vec<Cell>,
    entries: Vec<SuperLabel>,
}

/// `cur` may sit right of `left` and above `below`.
pub(crate) fn fits(left: Option<SuperLabel>, below: Option<SuperLabel>, cur: SuperLabel) -> bool {
    if let Some(l) = left {
        if l > cur || (cur.primed && l == cur) {
            return false;
        }
    }
    if let Some(b) = below {
        if b > cur || (!cur.primed && b == cur) {
            return false;
        }
    }
    true
}

/// For each cell, the positions of its left and lower neighbours inside the
/// shape (both come earlier in `cells()` order).
fn neighbours(cells: &[Cell]) -> Vec<(Option<usize>, Option<usize>)> {
    let pos = |c: Cell| cells.binary_search(&c).ok();
    cells
        .iter()
        .map(|c| {
            let left = (c.col > 1).then(|| pos(Cell { col: c.col - 1, ..*c })).flatten();
            let below = (c.row > 1).then(|| pos(Cell { row: c.row - 1, ..*c })).flatten();
            (left, below)
        })
        .collect()
}

impl SuperTableau {
    /// Builds a tableau from entries listed in `shape.cells()` order.
    pub fn new(shape: SkewTuple, entries: Vec<SuperLabel>) -> Result<SuperTableau, TableauError> {
        let cells = shape.cells();
        if cells.len() != entries.len() {
            return Err(TableauError::InvalidFilling("wrong number of entries".into()));
        }
        let nb = neighbours(&cells);
        for (i, &(l, b)) in nb.iter().enumerate() {
            if !fits(l.map(|j| entries[j]), b.map(|j| entries[j]), entries[i]) {
                return Err(TableauError::InvalidFilling(format!(
                    "entry {} at {:?} breaks the row or column rule",
                    entries[i], cells[i]
                )));
            }
        }
        Ok(SuperTableau { shape, cells, entries })
    }

    /// Builds a tableau from `(cell, label)` pairs in any order.
    pub fn from_pairs(
        shape: SkewTuple,
        pairs: impl IntoIterator<Item = (Cell, SuperLabel)>,
    ) -> Result<SuperTableau, TableauError> {
        let cells = shape.cells();
        let mut entries: Vec<Option<SuperLabel>> = vec![None; cells.len()];
        for (c, l) in pairs {
            let i = cells
                .binary_search(&c)
                .map_err(|_| TableauError::InvalidFilling(format!("{c:?} is not in the shape")))?;
            if entries[i].replace(l).is_some() {
                return Err(TableauError::InvalidFilling(format!("{c:?} filled twice")));
            }
        }
        let entries = entries
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| TableauError::InvalidFilling("some cell is empty".into()))?;
        SuperTableau::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewTuple {
        &self.shape
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn labels(&self) -> &[SuperLabel] {
        &self.entries
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, SuperLabel)> + '_ {
        self.cells.iter().copied().zip(self.entries.iter().copied())
    }

    pub fn get(&self, c: Cell) -> Option<SuperLabel> {
        self.cells.binary_search(&c).ok().map(|i| self.entries[i])
    }

    pub fn has_primes(&self) -> bool {
        self.entries.iter().any(|l| l.primed)
    }

    /// Multiplicities of `1..n` and of `1'..m'`.
    pub fn weight(&self, n: usize, m: usize) -> (Vec<u32>, Vec<u32>) {
        label_weight(&self.entries, n, m)
    }

    /// `x^T y^T'` over `vars`, which must contain the needed `x`/`y` names.
    pub fn monomial(&self, vars: &Arc<VarSet>) -> Result<Poly, TableauError> {
        label_monomial(vars, &self.entries, 0)
    }
}

pub(crate) fn label_weight(labels: &[SuperLabel], n: usize, m: usize) -> (Vec<u32>, Vec<u32>) {
    let mut x = vec![0; n];
    let mut y = vec![0; m];
    for l in labels {
        let v = l.value as usize - 1;
        if l.primed {
            y[v] += 1;
        } else {
            x[v] += 1;
        }
    }
    (x, y)
}

/// Exponents of `t^t_exp` times the product of `x_v` / `y_v` over the labels.
pub(crate) fn label_exps(
    vars: &Arc<VarSet>,
    labels: &[SuperLabel],
    t_exp: i32,
) -> Result<Exps, TableauError> {
    let mut exps = vec![0i32; vars.len()];
    exps[0] = t_exp;
    for l in labels {
        let name = format!("{}{}", if l.primed { 'y' } else { 'x' }, l.value);
        exps[vars.require(&name)?] += 1;
    }
    Ok(exps)
}

pub(crate) fn label_monomial(
    vars: &Arc<VarSet>,
    labels: &[SuperLabel],
    t_exp: i32,
) -> Result<Poly, TableauError> {
    Ok(Poly::monomial(vars, 1, label_exps(vars, labels, t_exp)?))
}

impl fmt::Display for SuperTableau {
    /// One block per component; rows listed from row 1 upward, `.` for
    /// cells of the inner shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blocks = Vec::new();
        for (i, (lam, mu)) in self.shape.lam().iter().zip(self.shape.mu()).enumerate() {
            let mut rows = Vec::new();
            for r in 1..=lam.len() {
                let mut row: Vec<String> = (1..=mu.part(r)).map(|_| ".".to_string()).collect();
                for c in mu.part(r) as usize + 1..=lam.part(r) as usize {
                    let l = self.get(Cell { shape: i, row: r, col: c }).expect("cell in shape");
                    row.push(l.to_string());
                }
                if !row.is_empty() {
                    rows.push(row.join(","));
                }
            }
            blocks.push(rows.join(" / "));
        }
        write!(f, "{{{}}}", blocks.join(" | "))
    }
}

/// Calls `f` with every semistandard super filling of `shape` in the
/// alphabet `1..n, 1'..m'`, given as labels parallel to `shape.cells()`.
/// Fillings come in lexicographic order of that list.
pub fn visit_sssyt(shape: &SkewTuple, n: usize, m: usize, mut f: impl FnMut(&[SuperLabel])) {
    let cells = shape.cells();
    let nb = neighbours(&cells);
    let alpha = alphabet(n, m);
    let mut cur: Vec<SuperLabel> = Vec::with_capacity(cells.len());
    fn rec(
        nb: &[(Option<usize>, Option<usize>)],
        alpha: &[SuperLabel],
        cur: &mut Vec<SuperLabel>,
        f: &mut dyn FnMut(&[SuperLabel]),
    ) {
        let i = cur.len();
        if i == nb.len() {
            f(cur);
            return;
        }
        let (l, b) = nb[i];
        let left = l.map(|j| cur[j]);
        let below = b.map(|j| cur[j]);
        for &a in alpha {
            if fits(left, below, a) {
                cur.push(a);
                rec(nb, alpha, cur, f);
                cur.pop();
            }
        }
    }
    rec(&nb, &alpha, &mut cur, &mut f);
}

/// All semistandard super tableaux of `shape` in `1..n, 1'..m'`. With
/// `m = 0` these are the ordinary semistandard tableaux.
pub fn enum_sssyt(shape: &SkewTuple, n: usize, m: usize) -> Vec<SuperTableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    visit_sssyt(shape, n, m, |labels| {
        out.push(SuperTableau {
            shape: shape.clone(),
            cells: cells.clone(),
            entries: labels.to_vec(),
        })
    });
    out
}
