use llt_algebra::{phi, pochhammer, Poly, RationalFn};
use serde::{Deserialize, Serialize};

use crate::edge::EdgeState;

/// The five vertex families. `L` and `Lp` are boxes with parameter `x`;
/// `R` and `Rp` are crosses with parameter `y/x`, `Rpp` with `x/y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    L,
    Lp,
    R,
    Rp,
    Rpp,
}

impl VertexKind {
    pub const ALL: [VertexKind; 5] =
        [VertexKind::L, VertexKind::Lp, VertexKind::R, VertexKind::Rp, VertexKind::Rpp];

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::L => "L",
            VertexKind::Lp => "L'",
            VertexKind::R => "R",
            VertexKind::Rp => "R'",
            VertexKind::Rpp => "R''",
        }
    }
}

/// Edge labels of a face: `[I, J, K, L]`. For a box these are bottom, left,
/// top, right; for a cross bottom-left, top-left, top-right, bottom-right.
pub type Labels = [EdgeState; 4];

fn t_pow(z: &RationalFn, e: i64) -> RationalFn {
    RationalFn::from_poly(Poly::t_pow(z.vars(), e as i32))
}

fn zpow(z: &RationalFn, e: i64) -> RationalFn {
    z.pow(e as i32).expect("spectral parameter must be nonzero")
}

fn conserved(k: usize, e: &Labels) -> bool {
    let [i, j, kk, l] = e.map(|s| s.bits(k));
    (0..k).all(|c| i[c] + j[c] == kk[c] + l[c])
}

/// Weight from the closed formulas; `z` is the subscript parameter
/// (`x` for `L`, `L'`; `y/x` for `R`, `R'`; `x/y` for `R''`).
pub fn algebraic(kind: VertexKind, k: usize, e: Labels, z: &RationalFn) -> RationalFn {
    let vars = z.vars().clone();
    if !conserved(k, &e) {
        return RationalFn::zero(&vars);
    }
    let [i, j, kk, l] = e.map(|s| s.bits(k));
    let sum = |a: &[i32]| a.iter().map(|&v| v as i64).sum::<i64>();
    let diff = |a: &[i32], b: &[i32]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<i32>>();
    let plus = |a: &[i32], b: &[i32]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i32>>();
    let ph = |a: &[i32], b: &[i32]| phi(a, b).expect("equal lengths");
    let no_double = (0..k).all(|c| i[c] + j[c] != 2);
    let k_over_j = (0..k).all(|c| kk[c] >= j[c]);
    let one = RationalFn::one(&vars);
    match kind {
        VertexKind::L if no_double => &zpow(z, sum(&l)) * &t_pow(z, ph(&l, &plus(&i, &j))),
        VertexKind::Lp if k_over_j => &zpow(z, sum(&l)) * &t_pow(z, ph(&l, &diff(&kk, &j))),
        VertexKind::R if (0..k).all(|c| j[c] >= kk[c]) => {
            let n = sum(&j) - sum(&kk);
            let sign = if n % 2 == 0 { one.clone() } else { -&one };
            let inv = z.inv().expect("nonzero");
            &(&(&sign * &zpow(z, sum(&j))) * &pochhammer(&inv, n as u32))
                * &t_pow(z, ph(&j, &diff(&kk, &j)))
        }
        VertexKind::Rp if no_double => {
            let neg_inv = -&z.inv().expect("nonzero");
            let den = pochhammer(&neg_inv, (sum(&kk) + sum(&l)) as u32);
            &(&zpow(z, -sum(&l)) * &den.inv().expect("nonzero pochhammer"))
                * &t_pow(z, ph(&l, &plus(&kk, &l)))
        }
        VertexKind::Rpp if k_over_j => {
            &(&zpow(z, sum(&l)) * &pochhammer(z, (sum(&kk) - sum(&j)) as u32))
                * &t_pow(z, ph(&l, &diff(&kk, &j)))
        }
        _ => RationalFn::zero(&vars),
    }
}

/// One-color weight of `(i, j, k, l)` with parameter `z`.
pub fn one_color(kind: VertexKind, e: [u8; 4], z: &RationalFn) -> RationalFn {
    let vars = z.vars().clone();
    let one = RationalFn::one(&vars);
    let zero = RationalFn::zero(&vars);
    let [i, j, k, l] = e;
    if i + j != k + l {
        return zero;
    }
    match kind {
        VertexKind::L => match (i, j, k, l) {
            (1, 1, _, _) => zero,
            (_, _, _, 1) => z.clone(),
            _ => one,
        },
        VertexKind::Lp => match (i, j, k, l) {
            (_, 1, 0, _) => zero,
            (_, _, _, 1) => z.clone(),
            _ => one,
        },
        VertexKind::R => match (i, j, k, l) {
            (_, 0, 1, _) => zero,
            (0, 1, 0, 1) => &one - z,
            (0, 1, 1, 0) | (1, 1, 1, 1) => z.clone(),
            _ => one,
        },
        VertexKind::Rp => {
            let d = (&one + z).inv().expect("1 + z is nonzero");
            match (i, j, k, l) {
                (1, 1, _, _) => zero,
                (0, 1, 0, 1) | (1, 0, 0, 1) => d,
                (0, 1, 1, 0) | (1, 0, 1, 0) => z * &d,
                _ => one,
            }
        }
        VertexKind::Rpp => match (i, j, k, l) {
            (_, 1, 0, _) => zero,
            (1, 0, 1, 0) => &one - z,
            (1, 0, 0, 1) | (1, 1, 1, 1) => z.clone(),
            _ => one,
        },
    }
}

/// Weight as a product of one-color weights with `t`-shifted parameters.
pub fn graphical(kind: VertexKind, k: usize, e: Labels, z: &RationalFn) -> RationalFn {
    let b = e.map(|s| s.bits(k));
    let col = |c: usize| [b[0][c] as u8, b[1][c] as u8, b[2][c] as u8, b[3][c] as u8];
    let counts = |c: usize, pred: &dyn Fn([u8; 4]) -> bool| -> i64 {
        (c + 1..k).filter(|&d| pred(col(d))).count() as i64
    };
    let present = |v: [u8; 4]| v.iter().any(|&x| x != 0);
    let mut out = RationalFn::one(z.vars());
    for c in 0..k {
        let shift = match kind {
            VertexKind::L => counts(c, &present),
            VertexKind::Lp => counts(c, &|v| v == [1, 0, 1, 0]),
            VertexKind::R => -counts(c, &|v| v == [0, 1, 0, 1]),
            VertexKind::Rp => -counts(c, &present),
            VertexKind::Rpp => counts(c, &|v| v == [1, 0, 1, 0]),
        };
        let zc = z * &t_pow(z, shift);
        out = &out * &one_color(kind, col(c), &zc);
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Faces used in row lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowKind {
    White,
    Purple,
    Gray,
    LightPurple,
}

/// Local moves of a row face: every `(K, L)` allowed for the given `(I, J)`.
pub fn face_moves(kind: RowKind, i: EdgeState, j: EdgeState) -> Vec<(EdgeState, EdgeState)> {
    let mut out = Vec::new();
    match kind {
        RowKind::White | RowKind::Gray => {
            if i.0 & j.0 != 0 {
                return out;
            }
            let u = i.0 | j.0;
            let mut s = u;
            loop {
                out.push((EdgeState(s), EdgeState(u & !s)));
                if s == 0 {
                    break;
                }
                s = (s - 1) & u;
            }
        }
        RowKind::Purple | RowKind::LightPurple => {
            let free = i.0 & !j.0;
            let mut s = free;
            loop {
                out.push((EdgeState(j.0 | s), EdgeState((i.0 & j.0) | (free & !s))));
                if s == 0 {
                    break;
                }
                s = (s - 1) & free;
            }
        }
    }
    out
}

/// `(x exponent, t exponent)` of a row face, which is always a monomial,
/// or `None` when the labels are not allowed.
///
/// Gray faces carry `x^k t^C(k,2) L` at `1/(x t^(k-1))`; light purple faces
/// `x^k L'` at `1/x`.
pub fn face_weight(kind: RowKind, k: usize, e: Labels) -> Option<(i32, i32)> {
    if !conserved(k, &e) {
        return None;
    }
    let [i, j, kk, l] = e.map(|s| s.bits(k));
    let nl = e[3].count() as i32;
    let k32 = k as i32;
    match kind {
        RowKind::White | RowKind::Gray => {
            if e[0].0 & e[1].0 != 0 {
                return None;
            }
            let u: Vec<i32> = i.iter().zip(&j).map(|(a, b)| a + b).collect();
            let f = phi(&l, &u).expect("equal lengths") as i32;
            if kind == RowKind::White {
                Some((nl, f))
            } else {
                Some((k32 - nl, k32 * (k32 - 1) / 2 - (k32 - 1) * nl + f))
            }
        }
        RowKind::Purple | RowKind::LightPurple => {
            if e[2].0 & e[1].0 != e[1].0 {
                return None;
            }
            let d: Vec<i32> = kk.iter().zip(&j).map(|(a, b)| a - b).collect();
            let f = phi(&l, &d).expect("equal lengths") as i32;
            if kind == RowKind::Purple {
                Some((nl, f))
            } else {
                Some((k32 - nl, f))
            }
        }
    }
}
