use llt_algebra::{BigInt, Poly, VarSet};
use llt_shapes::{Cell, SkewTuple};
use serde::Serialize;

use crate::label::SuperLabel;
use crate::tableau::{label_exps, visit_sssyt, SuperTableau};

/// Cells `u`, `v`, `w`: `v` in the shape, `w` on the content line of `v` in
/// a later component, `u` just left of `w`. `None` marks a cell outside the
/// shape (`u` then reads as 0, `w` as infinity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub u: Option<Cell>,
    pub v: Cell,
    pub w: Option<Cell>,
}

/// Every triple of `shape`.
pub fn triples(shape: &SkewTuple) -> Vec<Triple> {
    let mut out = Vec::new();
    let p = shape.p();
    for v in shape.cells() {
        for j in v.shape + 1..shape.k() {
            let (lam, mu) = (&shape.lam()[j], &shape.mu()[j]);
            for r in 1..=p {
                let col = v.content() + r as i64;
                if col < mu.part(r) as i64 + 1 || col > lam.part(r) as i64 + 1 {
                    continue;
                }
                let col = col as usize;
                let w = (col <= lam.part(r) as usize).then_some(Cell { shape: j, row: r, col });
                let u = (col - 1 > mu.part(r) as usize)
                    .then_some(Cell { shape: j, row: r, col: col - 1 });
                out.push(Triple { u, v, w });
            }
        }
    }
    out
}

pub fn count_triples(shape: &SkewTuple) -> usize {
    triples(shape).len()
}

/// Entry ranks `(a, b, c)` of a triple; 0 and `usize::MAX` stand in for
/// missing cells.
fn ranks(t: &Triple, get: &impl Fn(Cell) -> usize) -> (usize, usize, usize) {
    (t.u.map_or(0, get), get(t.v), t.w.map_or(usize::MAX, get))
}

fn is_coinv(a: usize, b: usize, c: usize) -> bool {
    a <= b && b <= c
}

fn is_inv(a: usize, b: usize, c: usize) -> bool {
    (b < a && a <= c) || (a <= c && c < b)
}

/// Label order as integers. Unprimed `v` ranks `v`, primed ones come after
/// every unprimed value.
fn rank(l: SuperLabel) -> usize {
    if l.primed {
        (1 << 20) + l.value as usize
    } else {
        l.value as usize
    }
}

fn count_with(tr: &[Triple], t: &SuperTableau, pred: fn(usize, usize, usize) -> bool) -> usize {
    let get = |c: Cell| rank(t.get(c).expect("triple cell in shape"));
    tr.iter()
        .filter(|x| {
            let (a, b, c) = ranks(x, &get);
            pred(a, b, c)
        })
        .count()
}

/// Number of coinversion triples `a <= b <= c`.
pub fn coinv(t: &SuperTableau) -> usize {
    count_with(&triples(t.shape()), t, is_coinv)
}

/// Number of inversion triples `b < a <= c` or `a <= c < b`.
pub fn inv(t: &SuperTableau) -> usize {
    count_with(&triples(t.shape()), t, is_inv)
}

fn llt_with(shape: &SkewTuple, n: usize, pred: fn(usize, usize, usize) -> bool) -> Poly {
    let vars = VarSet::families(n, 0, 0, 0, &[]);
    let tr = triples(shape);
    let cells = shape.cells();
    let mut acc = Poly::zero(&vars);
    visit_sssyt(shape, n, 0, |labels| {
        let get = |c: Cell| rank(labels[cells.binary_search(&c).expect("cell")]);
        let s = tr
            .iter()
            .filter(|x| {
                let (a, b, c) = ranks(x, &get);
                pred(a, b, c)
            })
            .count();
        let e = label_exps(&vars, labels, s as i32).expect("x variables exist");
        acc.add_term(e, BigInt::from(1));
    });
    acc
}

/// The coinversion LLT polynomial in `x1..xn` and `t`.
pub fn coinv_llt(shape: &SkewTuple, n: usize) -> Poly {
    llt_with(shape, n, is_coinv)
}

/// The inversion LLT polynomial in `x1..xn` and `t`.
pub fn inv_llt(shape: &SkewTuple, n: usize) -> Poly {
    llt_with(shape, n, is_inv)
}
