use llt_lattice::{face_moves, face_weight, EdgeState, RowKind};

use crate::report::VerificationReport;

/// Edges of a two by two block of faces, columns `a` (left) and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Block {
    bottom: [EdgeState; 2],
    left: [EdgeState; 2],
    /// Vertical edges between the rows.
    mid: [EdgeState; 2],
    /// Horizontal edges between the columns, lower row first.
    inner: [EdgeState; 2],
    top: [EdgeState; 2],
    right: [EdgeState; 2],
}

impl Block {
    /// Faces as `[I, J, K, L]`: lower left, lower right, upper left, upper right.
    fn faces(&self) -> [[EdgeState; 4]; 4] {
        [
            [self.bottom[0], self.left[0], self.mid[0], self.inner[0]],
            [self.bottom[1], self.inner[0], self.mid[1], self.right[0]],
            [self.mid[0], self.left[1], self.top[0], self.inner[1]],
            [self.mid[1], self.inner[1], self.top[1], self.right[1]],
        ]
    }

    /// Row kinds, lower row first. Returns summed `(x, t)` exponents per row.
    fn weight(&self, k: usize, kinds: [RowKind; 2]) -> Option<[(i32, i32); 2]> {
        let f = self.faces();
        let mut out = [(0, 0); 2];
        for (n, face) in f.iter().enumerate() {
            let (x, t) = face_weight(kinds[n / 2], k, *face)?;
            out[n / 2].0 += x;
            out[n / 2].1 += t;
        }
        Some(out)
    }

    /// Up the left column then right along the upper row.
    fn up_first(&self, c: usize) -> bool {
        self.mid[0].has(c) && self.inner[1].has(c) && !self.inner[0].has(c) && !self.mid[1].has(c)
    }

    /// Right along the lower row then up the right column.
    fn right_first(&self, c: usize) -> bool {
        self.inner[0].has(c) && self.mid[1].has(c) && !self.mid[0].has(c) && !self.inner[1].has(c)
    }

    fn flip(&self, c: usize) -> Block {
        let toggle = |e: EdgeState| EdgeState(e.0 ^ (1 << (c - 1)));
        Block {
            mid: [toggle(self.mid[0]), toggle(self.mid[1])],
            inner: [toggle(self.inner[0]), toggle(self.inner[1])],
            ..*self
        }
    }
}

/// Every valid block with the given row kinds.
fn blocks(k: usize, kinds: [RowKind; 2]) -> Vec<Block> {
    let mut out = Vec::new();
    let all: Vec<EdgeState> = EdgeState::all(k).collect();
    for &ia in &all {
        for &ib in &all {
            for &jb in &all {
                for &jt in &all {
                    for (va, hb) in face_moves(kinds[0], ia, jb) {
                        for (vb, rb) in face_moves(kinds[0], ib, hb) {
                            for (ta, ht) in face_moves(kinds[1], va, jt) {
                                for (tb, rt) in face_moves(kinds[1], vb, ht) {
                                    let b = Block {
                                        bottom: [ia, ib],
                                        left: [jb, jt],
                                        mid: [va, vb],
                                        inner: [hb, ht],
                                        top: [ta, tb],
                                        right: [rb, rt],
                                    };
                                    if b.weight(k, kinds).is_some() {
                                        out.push(b);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// White row `r` under purple row `-r`, nothing leaving right: flipping the
/// largest flippable color that ends on top of the right column negates the
/// weight.
pub fn check_cancellation_flip(k: usize) -> VerificationReport {
    let kinds = [RowKind::White, RowKind::Purple];
    let mut checked = 0;
    for b in blocks(k, kinds) {
        if !b.right[0].is_empty() || !b.right[1].is_empty() {
            continue;
        }
        let Some(c) = (1..=k).rev().find(|&c| b.top[1].has(c) && (b.up_first(c) || b.right_first(c))) else {
            continue;
        };
        let f = b.flip(c);
        let (Some(w0), Some(w1)) = (b.weight(k, kinds), f.weight(k, kinds)) else {
            return VerificationReport::fail("cancellation_flip", format!("k={k}"), format!("flip of {b:?} is not allowed"));
        };
        let same_monomial = w0[0].0 + w0[1].0 == w1[0].0 + w1[1].0 && w0[0].1 + w0[1].1 == w1[0].1 + w1[1].1;
        let opposite_sign = (w0[1].0 - w1[1].0).rem_euclid(2) == 1;
        if !(same_monomial && opposite_sign) {
            return VerificationReport::fail("cancellation_flip", format!("k={k}"), format!("{b:?}: {w0:?} vs {w1:?}"));
        }
        checked += 1;
    }
    VerificationReport::pass("cancellation_flip", format!("k={k} blocks={checked}"))
}

fn good(face: &[EdgeState; 4], i: usize, j: usize) -> bool {
    let present = |c: usize| face.iter().any(|e| e.has(c));
    (face[3].has(i) && present(j)) || (!present(i) && face[1].has(j))
}

fn good_count(b: &Block, i: usize, j: usize) -> usize {
    b.faces().iter().filter(|f| good(f, i, j)).count()
}

/// On two white rows, moving a corner of one color leaves the number of
/// good boxes for that color and any other unchanged.
pub fn check_corner_flip(k: usize) -> VerificationReport {
    let kinds = [RowKind::White, RowKind::White];
    let mut checked = 0;
    for b in blocks(k, kinds) {
        for c in (1..=k).filter(|&c| b.up_first(c)) {
            let f = b.flip(c);
            if f.weight(k, kinds).is_none() {
                continue;
            }
            for o in (1..=k).filter(|&o| o != c) {
                let (i, j) = if o < c { (o, c) } else { (c, o) };
                if good_count(&b, i, j) != good_count(&f, i, j) {
                    return VerificationReport::fail(
                        "corner_flip",
                        format!("k={k}"),
                        format!("colors {i},{j} in {b:?}"),
                    );
                }
            }
            checked += 1;
        }
    }
    VerificationReport::pass("corner_flip", format!("k={k} flips={checked}"))
}
