use llt_shapes::{Partition, SkewTuple};
use serde::{Deserialize, Serialize};

use crate::edge::EdgeState;
use crate::weights::RowKind;
use crate::LatticeError;

/// One row of faces with its spectral variable and side boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub kind: RowKind,
    /// Name of the row variable in the target variable set.
    pub var: String,
    pub left: EdgeState,
    pub right: EdgeState,
}

impl Row {
    pub fn white(var: impl Into<String>) -> Row {
        Row { kind: RowKind::White, var: var.into(), left: EdgeState::EMPTY, right: EdgeState::EMPTY }
    }

    pub fn purple(var: impl Into<String>) -> Row {
        Row { kind: RowKind::Purple, var: var.into(), left: EdgeState::EMPTY, right: EdgeState::EMPTY }
    }

    /// Gray rows are entered by nothing on the left and exit every color right.
    pub fn gray(var: impl Into<String>, k: usize) -> Row {
        Row { kind: RowKind::Gray, var: var.into(), left: EdgeState::EMPTY, right: EdgeState::full(k) }
    }

    /// Light purple rows take every color in on the left.
    pub fn light_purple(var: impl Into<String>, k: usize) -> Row {
        Row {
            kind: RowKind::LightPurple,
            var: var.into(),
            left: EdgeState::full(k),
            right: EdgeState::EMPTY,
        }
    }

    /// Shift of the zero-content marker from the bottom to the top of the row.
    pub fn origin_shift(&self) -> i32 {
        match self.kind {
            RowKind::Gray => -1,
            RowKind::LightPurple => 1,
            _ => 0,
        }
    }
}

/// A stack of rows over the columns `cmin..=cmax`, listed bottom to top.
/// `bottom` and `top` hold one state per column. `origin` is the column
/// offset of the zero-content marker on the bottom boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub k: usize,
    pub cmin: i32,
    pub cmax: i32,
    pub origin: i32,
    pub rows: Vec<Row>,
    pub bottom: Vec<EdgeState>,
    pub top: Vec<EdgeState>,
}

/// Column states of `alpha`: color `i` sits at `alpha^(i)_r - r + 1 + origin`.
pub fn boundary_encode(
    alpha: &[Partition],
    cmin: i32,
    cmax: i32,
    origin: i32,
) -> Result<Vec<EdgeState>, LatticeError> {
    let mut out = vec![EdgeState::EMPTY; (cmax - cmin + 1).max(0) as usize];
    for (i, a) in alpha.iter().enumerate() {
        for r in 1..=a.len() {
            let c = a.part(r) as i32 - r as i32 + 1 + origin;
            if c < cmin || c > cmax {
                return Err(LatticeError::ColumnRange { column: c, cmin, cmax });
            }
            out[(c - cmin) as usize] = out[(c - cmin) as usize].with(i + 1);
        }
    }
    Ok(out)
}

/// Inverse of [`boundary_encode`]. Each color gives a partition with as many
/// parts as it has occupied columns.
pub fn boundary_decode(
    states: &[EdgeState],
    k: usize,
    cmin: i32,
    origin: i32,
) -> Result<Vec<Partition>, LatticeError> {
    (1..=k)
        .map(|color| {
            let cols: Vec<i32> = (0..states.len())
                .rev()
                .filter(|&i| states[i].has(color))
                .map(|i| i as i32 + cmin)
                .collect();
            let parts: Vec<i64> =
                cols.iter().enumerate().map(|(r, &c)| (c - origin + r as i32) as i64).collect();
            if parts.iter().any(|&p| p < 0) {
                return Err(LatticeError::Boundary("negative part".into()));
            }
            Partition::new(parts.into_iter().map(|p| p as u32).collect())
                .map_err(|e| LatticeError::Boundary(e.to_string()))
        })
        .collect()
}

impl LatticeSpec {
    pub fn new(
        k: usize,
        cmin: i32,
        cmax: i32,
        origin: i32,
        rows: Vec<Row>,
        bottom: Vec<EdgeState>,
        top: Vec<EdgeState>,
    ) -> Result<LatticeSpec, LatticeError> {
        let width = (cmax - cmin + 1).max(0) as usize;
        if bottom.len() != width || top.len() != width {
            return Err(LatticeError::Boundary("boundary width differs from column range".into()));
        }
        let mask = EdgeState::full(k).0;
        let states = bottom.iter().chain(&top).chain(rows.iter().flat_map(|r| [&r.left, &r.right]));
        if states.into_iter().any(|s| s.0 & !mask != 0) {
            return Err(LatticeError::Boundary("color outside 1..k".into()));
        }
        Ok(LatticeSpec { k, cmin, cmax, origin, rows, bottom, top })
    }

    /// `shape.mu()` on the bottom and `shape.lam()` on the top of `rows`,
    /// over the columns `1 - p ..= max part + 1`.
    pub fn for_shape(shape: &SkewTuple, rows: Vec<Row>) -> Result<LatticeSpec, LatticeError> {
        let cmin = 1 - shape.p() as i32;
        let cmax = shape.max_part() as i32 + 1;
        let bottom = boundary_encode(shape.mu(), cmin, cmax, 0)?;
        let top = boundary_encode(shape.lam(), cmin, cmax, 0)?;
        LatticeSpec::new(shape.k(), cmin, cmax, 0, rows, bottom, top)
    }

    /// White rows `x1..xn`, bottom to top.
    pub fn white(shape: &SkewTuple, n: usize) -> Result<LatticeSpec, LatticeError> {
        LatticeSpec::for_shape(shape, (1..=n).map(|i| Row::white(format!("x{i}"))).collect())
    }

    /// Purple rows `x1..xn`.
    pub fn purple(shape: &SkewTuple, n: usize) -> Result<LatticeSpec, LatticeError> {
        LatticeSpec::for_shape(shape, (1..=n).map(|i| Row::purple(format!("x{i}"))).collect())
    }

    /// White rows `x1..xn` below purple rows `y1..ym`.
    pub fn supersymmetric(shape: &SkewTuple, n: usize, m: usize) -> Result<LatticeSpec, LatticeError> {
        let rows = (1..=n)
            .map(|i| Row::white(format!("x{i}")))
            .chain((1..=m).map(|j| Row::purple(format!("y{j}"))))
            .collect();
        LatticeSpec::for_shape(shape, rows)
    }

    pub fn width(&self) -> usize {
        (self.cmax - self.cmin + 1) as usize
    }

    /// Adds empty columns on both sides.
    pub fn with_margin(&self, left: usize, right: usize) -> LatticeSpec {
        let pad = |v: &[EdgeState]| {
            let mut out = vec![EdgeState::EMPTY; left];
            out.extend_from_slice(v);
            out.extend(std::iter::repeat_n(EdgeState::EMPTY, right));
            out
        };
        LatticeSpec {
            cmin: self.cmin - left as i32,
            cmax: self.cmax + right as i32,
            bottom: pad(&self.bottom),
            top: pad(&self.top),
            ..self.clone()
        }
    }

    /// Origin of the zero-content marker at horizontal line `level`
    /// (0 is the bottom boundary).
    pub fn origin_at(&self, level: usize) -> i32 {
        self.origin + self.rows[..level].iter().map(Row::origin_shift).sum::<i32>()
    }

    /// Whether every row has empty sides, so paths are conserved row by row.
    pub fn closed_sides(&self) -> bool {
        self.rows.iter().all(|r| r.left.is_empty() && r.right.is_empty())
    }
}


