use std::collections::HashMap;
use std::sync::Arc;

use llt_algebra::{Poly, VarSet};
use serde::{Deserialize, Serialize};

use crate::edge::EdgeState;
use crate::spec::{LatticeSpec, Row};
use crate::weights::{face_moves, face_weight};
use crate::LatticeError;

/// A full assignment of edge states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeConfig {
    /// Vertical edges on each horizontal line, bottom boundary first.
    pub levels: Vec<Vec<EdgeState>>,
    /// Horizontal edges of each row, left boundary first (`width + 1` each).
    pub horizontals: Vec<Vec<EdgeState>>,
}

/// Receives `(top, horizontal edges, x exponent, t exponent)`.
type RowVisitor<'a> = dyn FnMut(&[EdgeState], &[EdgeState], i32, i32) + 'a;

/// Every filling of one row above `bottom`, reported as
/// `(top, horizontal edges, x exponent, t exponent)`.
pub(crate) fn visit_row(
    k: usize,
    row: &Row,
    bottom: &[EdgeState],
    f: &mut RowVisitor,
) {
    struct Dfs<'a> {
        k: usize,
        row: &'a Row,
        bottom: &'a [EdgeState],
        top: Vec<EdgeState>,
        horiz: Vec<EdgeState>,
    }
    fn go(d: &mut Dfs, col: usize, x: i32, t: i32, f: &mut RowVisitor) {
        let j = *d.horiz.last().expect("left boundary pushed");
        if col == d.bottom.len() {
            if j == d.row.right {
                f(&d.top, &d.horiz, x, t);
            }
            return;
        }
        let i = d.bottom[col];
        for (kk, l) in face_moves(d.row.kind, i, j) {
            let Some((dx, dt)) = face_weight(d.row.kind, d.k, [i, j, kk, l]) else {
                continue;
            };
            d.top.push(kk);
            d.horiz.push(l);
            go(d, col + 1, x + dx, t + dt, f);
            d.top.pop();
            d.horiz.pop();
        }
    }
    let mut d = Dfs { k, row, bottom, top: Vec::new(), horiz: vec![row.left] };
    go(&mut d, 0, 0, 0, f);
}

/// Sorted column indices of each color.
fn positions(k: usize, level: &[EdgeState]) -> Vec<Vec<usize>> {
    (1..=k).map(|c| (0..level.len()).filter(|&i| level[i].has(c)).collect()).collect()
}

/// Paths of one color never cross and move weakly right, so with closed
/// sides the `j`-th path of every color stays between its bottom and top
/// columns.
struct Window {
    lo: Vec<Vec<usize>>,
    hi: Vec<Vec<usize>>,
}

impl Window {
    fn new(spec: &LatticeSpec) -> Option<Option<Window>> {
        if !spec.closed_sides() {
            return Some(None);
        }
        let lo = positions(spec.k, &spec.bottom);
        let hi = positions(spec.k, &spec.top);
        if lo.iter().zip(&hi).any(|(a, b)| a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x > y)) {
            return None;
        }
        Some(Some(Window { lo, hi }))
    }

    fn admits(&self, level: &[EdgeState]) -> bool {
        let pos = positions(self.lo.len(), level);
        pos.iter().zip(self.lo.iter().zip(&self.hi)).all(|(p, (lo, hi))| {
            p.len() == lo.len() && p.iter().zip(lo.iter().zip(hi)).all(|(x, (a, b))| a <= x && x <= b)
        })
    }
}

fn row_var(spec: &LatticeSpec, vars: &Arc<VarSet>) -> Result<Vec<usize>, LatticeError> {
    spec.rows.iter().map(|r| Ok(vars.require(&r.var)?)).collect()
}

/// Sum of configuration weights, computed row by row over the states of
/// each horizontal line.
pub fn partition_function(spec: &LatticeSpec, vars: &Arc<VarSet>) -> Result<Poly, LatticeError> {
    let idx = row_var(spec, vars)?;
    let Some(window) = Window::new(spec) else {
        return Ok(Poly::zero(vars));
    };
    let mut cur: HashMap<Vec<EdgeState>, Poly> = HashMap::new();
    cur.insert(spec.bottom.clone(), Poly::one(vars));
    for (r, row) in spec.rows.iter().enumerate() {
        let mut next: HashMap<Vec<EdgeState>, Poly> = HashMap::new();
        let last = r + 1 == spec.rows.len();
        for (state, val) in &cur {
            visit_row(spec.k, row, state, &mut |top, _, x, t| {
                if last && top != spec.top.as_slice() {
                    return;
                }
                if window.as_ref().is_some_and(|w| !w.admits(top)) {
                    return;
                }
                let mut shift = vec![0; vars.len()];
                shift[0] = t;
                shift[idx[r]] += x;
                next.entry(top.to_vec())
                    .or_insert_with(|| Poly::zero(vars))
                    .add_scaled_shifted(val, 1, &shift);
            });
        }
        cur = next;
    }
    if spec.rows.is_empty() {
        return Ok(if spec.bottom == spec.top { Poly::one(vars) } else { Poly::zero(vars) });
    }
    Ok(cur.remove(&spec.top).unwrap_or_else(|| Poly::zero(vars)))
}

/// Every valid configuration, by depth-first search over rows.
pub fn configurations(spec: &LatticeSpec) -> Vec<LatticeConfig> {
    let mut out = Vec::new();
    let Some(window) = Window::new(spec) else {
        return out;
    };
    fn go(
        spec: &LatticeSpec,
        window: &Option<Window>,
        levels: &mut Vec<Vec<EdgeState>>,
        horiz: &mut Vec<Vec<EdgeState>>,
        out: &mut Vec<LatticeConfig>,
    ) {
        let r = horiz.len();
        if r == spec.rows.len() {
            if levels.last() == Some(&spec.top) {
                out.push(LatticeConfig { levels: levels.clone(), horizontals: horiz.clone() });
            }
            return;
        }
        let mut found = Vec::new();
        let bottom = levels.last().expect("bottom level").clone();
        visit_row(spec.k, &spec.rows[r], &bottom, &mut |top, h, _, _| {
            if window.as_ref().is_none_or(|w| w.admits(top)) {
                found.push((top.to_vec(), h.to_vec()));
            }
        });
        for (top, h) in found {
            levels.push(top);
            horiz.push(h);
            go(spec, window, levels, horiz, out);
            levels.pop();
            horiz.pop();
        }
    }
    go(spec, &window, &mut vec![spec.bottom.clone()], &mut Vec::new(), &mut out);
    out
}

/// Row-variable and `t` exponents of a configuration, or `None` if some
/// face is not allowed.
pub fn config_exponents(spec: &LatticeSpec, cfg: &LatticeConfig) -> Option<(Vec<i32>, i32)> {
    let mut xs = Vec::new();
    let mut t = 0;
    for (r, row) in spec.rows.iter().enumerate() {
        let mut x = 0;
        for c in 0..spec.width() {
            let e = [cfg.levels[r][c], cfg.horizontals[r][c], cfg.levels[r + 1][c], cfg.horizontals[r][c + 1]];
            let (dx, dt) = face_weight(row.kind, spec.k, e)?;
            x += dx;
            t += dt;
        }
        xs.push(x);
    }
    Some((xs, t))
}

/// Weight of a configuration as a monomial over `vars`.
pub fn config_weight(spec: &LatticeSpec, cfg: &LatticeConfig, vars: &Arc<VarSet>) -> Result<Poly, LatticeError> {
    let idx = row_var(spec, vars)?;
    let Some((xs, t)) = config_exponents(spec, cfg) else {
        return Ok(Poly::zero(vars));
    };
    let mut e = vec![0; vars.len()];
    e[0] = t;
    for (i, x) in idx.iter().zip(xs) {
        e[*i] += x;
    }
    Ok(Poly::monomial(vars, 1, e))
}

/// Checks boundaries and path conservation of a configuration.
pub fn is_valid(spec: &LatticeSpec, cfg: &LatticeConfig) -> bool {
    let n = spec.rows.len();
    let w = spec.width();
    cfg.levels.len() == n + 1
        && cfg.horizontals.len() == n
        && cfg.levels.iter().all(|l| l.len() == w)
        && cfg.horizontals.iter().all(|h| h.len() == w + 1)
        && cfg.levels[0] == spec.bottom
        && cfg.levels[n] == spec.top
        && spec.rows.iter().zip(&cfg.horizontals).all(|(r, h)| h[0] == r.left && h[w] == r.right)
        && config_exponents(spec, cfg).is_some()
}
