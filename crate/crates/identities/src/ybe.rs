use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use llt_algebra::{Poly, RationalFn, VarSet};
use llt_lattice::{algebraic, graphical, EdgeState, VertexKind};

use crate::report::VerificationReport;

/// The three exchange relations: two white boxes with `R`, purple over white
/// with `R'`, and two purple boxes with `R''`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ybe {
    White,
    PurpleWhite,
    Purple,
}

impl Ybe {
    pub const ALL: [Ybe; 3] = [Ybe::White, Ybe::PurpleWhite, Ybe::Purple];

    pub fn name(self) -> &'static str {
        match self {
            Ybe::White => "white",
            Ybe::PurpleWhite => "purple_white",
            Ybe::Purple => "purple",
        }
    }

    /// Kinds of the `x` box, the `y` box and the cross. The `x` box is below
    /// on the left-hand side and above on the right-hand side.
    fn kinds(self) -> (VertexKind, VertexKind, VertexKind) {
        match self {
            Ybe::White => (VertexKind::L, VertexKind::L, VertexKind::R),
            Ybe::PurpleWhite => (VertexKind::L, VertexKind::Lp, VertexKind::Rp),
            Ybe::Purple => (VertexKind::Lp, VertexKind::Lp, VertexKind::Rpp),
        }
    }
}

impl fmt::Display for Ybe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Ybe {
    type Err = String;
    fn from_str(s: &str) -> Result<Ybe, String> {
        Ybe::ALL.into_iter().find(|y| y.name() == s).ok_or_else(|| format!("unknown relation `{s}`"))
    }
}

type Table = HashMap<(u32, u32), Vec<(u32, u32, Poly)>>;

/// Nonzero weights indexed by the first two labels.
fn table(kind: VertexKind, k: usize, z: &RationalFn, clear: &Option<Poly>) -> Table {
    let mut out: Table = HashMap::new();
    for i in EdgeState::all(k) {
        for j in EdgeState::all(k) {
            for kk in EdgeState::all(k) {
                for l in EdgeState::all(k) {
                    let w = algebraic(kind, k, [i, j, kk, l], z);
                    if w.is_zero() {
                        continue;
                    }
                    let w = match clear {
                        Some(c) => (&w * &RationalFn::from_poly(c.clone())).to_poly(),
                        None => w.to_poly(),
                    }
                    .expect("weight becomes a Laurent polynomial");
                    out.entry((i.0, j.0)).or_default().push((kk.0, l.0, w));
                }
            }
        }
    }
    out
}

fn key(b: [u32; 6], k: usize) -> u64 {
    b.iter().fold(0u64, |acc, &v| (acc << k) | v as u64)
}

fn unkey(mut key: u64, k: usize) -> [u32; 6] {
    let mut out = [0u32; 6];
    for slot in out.iter_mut().rev() {
        *slot = (key & ((1 << k) - 1)) as u32;
        key >>= k;
    }
    out
}

fn add(map: &mut HashMap<u64, Poly>, key: u64, p: Poly) {
    match map.get_mut(&key) {
        Some(q) => *q = &*q + &p,
        None => {
            map.insert(key, p);
        }
    }
}

/// Checks the relation for every boundary `(I1, J1, K1, I3, J3, K3)`.
/// `R'` has its denominators cleared by `(-x/y; t)_{2k}` on both sides.
pub fn verify_ybe(which: Ybe, k: usize) -> VerificationReport {
    let vars: Arc<VarSet> = llt_algebra::vars(&["x", "y"]);
    let var = |n: &str| RationalFn::from_poly(Poly::var(&vars, n).expect("declared"));
    let (x, y) = (var("x"), var("y"));
    let (low, high, cross) = which.kinds();
    let ratio = match which {
        Ybe::Purple => x.checked_div(&y),
        _ => y.checked_div(&x),
    }
    .expect("nonzero");
    let clear = (cross == VertexKind::Rp).then(|| {
        let xy = Poly::var_pow(&vars, "x", 1).expect("x") * Poly::var_pow(&vars, "y", -1).expect("y");
        llt_algebra::pochhammer_poly(&-xy, 2 * k as u32)
    });
    let lx = table(low, k, &x, &None);
    let hy = table(high, k, &y, &None);
    let r = table(cross, k, &ratio, &clear);
    let empty = Vec::new();
    let mut lhs: HashMap<u64, Poly> = HashMap::new();
    // cross on the left: R(I1, J1; C, D), then low_x(K1, D; M, J3), high_y(M, C; K3, I3)
    for (&(i1, j1), outs) in &r {
        for (c, d, wr) in outs {
            for k1 in 0..1u32 << k {
                for (m, j3, wl) in lx.get(&(k1, *d)).unwrap_or(&empty) {
                    let a = wr * wl;
                    for (k3, i3, wh) in hy.get(&(*m, *c)).unwrap_or(&empty) {
                        add(&mut lhs, key([i1, j1, k1, *i3, *j3, *k3], k), &a * wh);
                    }
                }
            }
        }
    }
    let mut rhs: HashMap<u64, Poly> = HashMap::new();
    // cross on the right: high_y(K1, I1; M, A), low_x(M, J1; K3, B), R(A, B; I3, J3)
    for (&(k1, i1), outs) in &hy {
        for (m, a, wl) in outs {
            for j1 in 0..1u32 << k {
                for (k3, b, wh) in lx.get(&(*m, j1)).unwrap_or(&empty) {
                    let p = wl * wh;
                    for (i3, j3, wr) in r.get(&(*a, *b)).unwrap_or(&empty) {
                        add(&mut rhs, key([i1, j1, k1, *i3, *j3, *k3], k), &p * wr);
                    }
                }
            }
        }
    }
    let zero = Poly::zero(&vars);
    let boundaries = 1u64 << (6 * k);
    let instance = format!("k={k}, {boundaries} boundaries");
    let mut keys: Vec<u64> = lhs.keys().chain(rhs.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for key_ in keys {
        let a = lhs.get(&key_).unwrap_or(&zero);
        let b = rhs.get(&key_).unwrap_or(&zero);
        if a != b {
            let [i1, j1, k1, i3, j3, k3] = unkey(key_, k).map(EdgeState);
            return VerificationReport::fail(
                format!("ybe_{}", which.name()),
                instance,
                format!("I1={i1} J1={j1} K1={k1} I3={i3} J3={j3} K3={k3}: lhs = {a}; rhs = {b}"),
            );
        }
    }
    VerificationReport::pass(format!("ybe_{}", which.name()), instance)
}

/// Closed formulas against products of one-color weights, every label
/// tuple, all five families.
pub fn verify_weight_tables(k: usize) -> VerificationReport {
    let vars = llt_algebra::vars(&["x", "y"]);
    let x = RationalFn::from_poly(Poly::var(&vars, "x").expect("x"));
    let y = RationalFn::from_poly(Poly::var(&vars, "y").expect("y"));
    let z = y.checked_div(&x).expect("nonzero");
    let mut count = 0usize;
    for kind in VertexKind::ALL {
        let param = match kind {
            VertexKind::L | VertexKind::Lp => &x,
            _ => &z,
        };
        for i in EdgeState::all(k) {
            for j in EdgeState::all(k) {
                for kk in EdgeState::all(k) {
                    for l in EdgeState::all(k) {
                        let e = [i, j, kk, l];
                        let a = algebraic(kind, k, e, param);
                        let g = graphical(kind, k, e, param);
                        count += 1;
                        if !a.equals(&g) {
                            return VerificationReport::fail(
                                "weights_algebraic_graphical",
                                format!("k={k}"),
                                format!("{} {i} {j} {kk} {l}: algebraic {a}, graphical {g}", kind.name()),
                            );
                        }
                    }
                }
            }
        }
    }
    VerificationReport::pass("weights_algebraic_graphical", format!("k={k}, {count} label tuples"))
}
