use std::collections::BTreeMap;

use llt_shapes::{Cell, SkewTuple};

use crate::tableau::SuperTableau;

/// Draws a tuple on content lines: component `i` is shifted `i * (p + 1)`
/// steps up and right, so cells of equal content share a diagonal. Row 1 is
/// at the bottom. `.` marks inner-shape cells, `[]` empty outer cells.
pub fn render_tuple(shape: &SkewTuple, fill: &dyn Fn(Cell) -> Option<String>) -> String {
    let shift = shape.p() + 1;
    let mut grid: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for (i, (lam, mu)) in shape.lam().iter().zip(shape.mu()).enumerate() {
        for r in 1..=lam.len() {
            for c in 1..=lam.part(r) as usize {
                let s = if c <= mu.part(r) as usize {
                    ".".to_string()
                } else {
                    fill(Cell { shape: i, row: r, col: c }).unwrap_or_else(|| "[]".into())
                };
                grid.insert((r + i * shift, c + i * shift), s);
            }
        }
    }
    let Some(top) = grid.keys().map(|k| k.0).max() else {
        return String::from("(empty)\n");
    };
    let right = grid.keys().map(|k| k.1).max().unwrap_or(0);
    let w = grid.values().map(|s| s.len()).max().unwrap_or(1).max(2) + 1;
    let mut out = String::new();
    for y in (1..=top).rev() {
        let mut line = String::new();
        for x in 1..=right {
            let s = grid.get(&(y, x)).map(String::as_str).unwrap_or("");
            line.push_str(&format!("{s:>w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_tableau(t: &SuperTableau) -> String {
    render_tuple(t.shape(), &|c| t.get(c).map(|l| l.to_string()))
}
