use llt_shapes::{Cell, Partition, SkewTuple};
use llt_tableaux::{littlewood_inverse, littlewood_map, RibbonTableau, SuperLabel, SuperTableau};

use crate::edge::EdgeState;
use crate::spec::LatticeSpec;
use crate::transfer::{is_valid, LatticeConfig};
use crate::weights::RowKind;
use crate::LatticeError;

/// Index of the row a label steps right in: white rows `1..n`, then purple
/// rows `1'..m'`.
fn row_of(label: SuperLabel, n: usize) -> usize {
    if label.primed {
        n + label.value as usize - 1
    } else {
        label.value as usize - 1
    }
}

fn label_of(row: usize, n: usize) -> SuperLabel {
    if row < n {
        SuperLabel::plain(row as u32 + 1)
    } else {
        SuperLabel::primed((row - n) as u32 + 1)
    }
}

fn check_rows(spec: &LatticeSpec, n: usize, m: usize) -> Result<(), LatticeError> {
    let kinds: Vec<RowKind> = spec.rows.iter().map(|r| r.kind).collect();
    let want: Vec<RowKind> = std::iter::repeat_n(RowKind::White, n)
        .chain(std::iter::repeat_n(RowKind::Purple, m))
        .collect();
    if kinds != want {
        return Err(LatticeError::Boundary("expected n white rows below m purple rows".into()));
    }
    Ok(())
}

/// The configuration of a tableau: row `r` of shape `i` is a path of color
/// `i + 1` that steps right in the row of each of its entries.
pub fn tableau_to_config(
    t: &SuperTableau,
    spec: &LatticeSpec,
    n: usize,
    m: usize,
) -> Result<LatticeConfig, LatticeError> {
    check_rows(spec, n, m)?;
    let shape = t.shape();
    let rows = n + m;
    let w = spec.width();
    let mut levels = vec![vec![EdgeState::EMPTY; w]; rows + 1];
    let mut horizontals = vec![vec![EdgeState::EMPTY; w + 1]; rows];
    for (i, mu) in shape.mu().iter().enumerate() {
        for r in 1..=shape.p() {
            let mut steps = vec![0usize; rows];
            for (c, l) in t.entries() {
                if c.shape == i && c.row == r {
                    let idx = row_of(l, n);
                    if idx >= rows {
                        return Err(LatticeError::Boundary(format!("label {l} outside the alphabet")));
                    }
                    steps[idx] += 1;
                }
            }
            let mut pos = mu.part(r) as i32 - r as i32 + 1;
            for (level, d) in std::iter::once(0).chain(steps.iter().copied()).enumerate() {
                if level > 0 {
                    for c in pos..pos + d as i32 {
                        let h = &mut horizontals[level - 1][(c - spec.cmin) as usize + 1];
                        if h.has(i + 1) {
                            return Err(LatticeError::Boundary("paths of one color overlap".into()));
                        }
                        *h = h.with(i + 1);
                    }
                    pos += d as i32;
                }
                if pos < spec.cmin || pos > spec.cmax {
                    return Err(LatticeError::ColumnRange { column: pos, cmin: spec.cmin, cmax: spec.cmax });
                }
                let e = &mut levels[level][(pos - spec.cmin) as usize];
                *e = e.with(i + 1);
            }
        }
    }
    let cfg = LatticeConfig { levels, horizontals };
    if !is_valid(spec, &cfg) {
        return Err(LatticeError::Boundary("tableau does not give a valid configuration".into()));
    }
    Ok(cfg)
}

/// Inverse of [`tableau_to_config`] on the shape whose boundaries `spec` has.
pub fn config_to_tableau(
    cfg: &LatticeConfig,
    spec: &LatticeSpec,
    shape: &SkewTuple,
    n: usize,
    m: usize,
) -> Result<SuperTableau, LatticeError> {
    check_rows(spec, n, m)?;
    let mut pairs: Vec<(Cell, SuperLabel)> = Vec::new();
    for (i, mu) in shape.mu().iter().enumerate() {
        let cols = |level: &[EdgeState]| -> Vec<i32> {
            (0..level.len()).rev().filter(|&c| level[c].has(i + 1)).map(|c| c as i32 + spec.cmin).collect()
        };
        let per_level: Vec<Vec<i32>> = cfg.levels.iter().map(|l| cols(l)).collect();
        for r in 1..=shape.p() {
            let mut col = mu.part(r) as usize;
            for row in 0..n + m {
                let (a, b) = (per_level[row].get(r - 1), per_level[row + 1].get(r - 1));
                let (Some(a), Some(b)) = (a, b) else {
                    return Err(LatticeError::Boundary("path count changes".into()));
                };
                for _ in *a..*b {
                    col += 1;
                    pairs.push((Cell { shape: i, row: r, col }, label_of(row, n)));
                }
            }
        }
    }
    Ok(SuperTableau::from_pairs(shape.clone(), pairs)?)
}

/// The lattice `S_{n,m}` of the `k`-quotient of `lam / mu`, components
/// aligned so that equal contents share a column.
pub fn quotient_lattice(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<(SkewTuple, LatticeSpec), LatticeError> {
    let shape = llt_shapes::aligned_k_quotient(lam, mu, k)?;
    let spec = LatticeSpec::supersymmetric(&shape, n, m)?;
    Ok((shape, spec))
}

/// Moves a tableau between two shapes with the same skew cells up to a
/// per-row horizontal shift.
fn shift_tableau(t: &SuperTableau, to: &SkewTuple) -> Result<SuperTableau, LatticeError> {
    let from = t.shape();
    let pairs: Vec<(Cell, SuperLabel)> = t
        .entries()
        .map(|(c, l)| {
            let d = to.mu()[c.shape].part(c.row) as i64 - from.mu()[c.shape].part(c.row) as i64;
            (Cell { col: (c.col as i64 + d) as usize, ..c }, l)
        })
        .collect();
    Ok(SuperTableau::from_pairs(to.clone(), pairs)?)
}

/// Sends a super ribbon tableau to a configuration of `S_{n,m}` of its
/// quotient, through the Littlewood map.
pub fn theta(t: &RibbonTableau, n: usize, m: usize) -> Result<(LatticeSpec, LatticeConfig), LatticeError> {
    let (shape, spec) = quotient_lattice(t.lam(), t.mu(), t.k(), n, m)?;
    let tab = shift_tableau(&littlewood_map(t)?, &shape)?;
    let cfg = tableau_to_config(&tab, &spec, n, m)?;
    Ok((spec, cfg))
}

pub fn theta_inverse(
    cfg: &LatticeConfig,
    lam: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
    m: usize,
) -> Result<RibbonTableau, LatticeError> {
    let (shape, spec) = quotient_lattice(lam, mu, k, n, m)?;
    let tab = config_to_tableau(cfg, &spec, &shape, n, m)?;
    let plain = llt_shapes::skew_k_quotient(lam, mu, k)?;
    Ok(littlewood_inverse(&shift_tableau(&tab, &plain)?, lam, mu, k)?)
}
