use llt_shapes::Partition;
use serde::Serialize;

/// A connected skew shape without 2x2 squares. Cells are `(row, col)`,
/// sorted, with row 1 at the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ribbon {
    cells: Vec<(usize, usize)>,
}

impl Ribbon {
    pub fn new(mut cells: Vec<(usize, usize)>) -> Ribbon {
        cells.sort_unstable();
        Ribbon { cells }
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// South-east-most cell: rightmost cell of the lowest row.
    pub fn head(&self) -> (usize, usize) {
        let low = self.cells[0].0;
        *self.cells.iter().rev().find(|c| c.0 == low).expect("nonempty")
    }

    /// North-west-most cell: leftmost cell of the highest row.
    pub fn tail(&self) -> (usize, usize) {
        let high = self.cells.last().expect("nonempty").0;
        *self.cells.iter().find(|c| c.0 == high).expect("nonempty")
    }

    /// Number of rows met.
    pub fn height(&self) -> usize {
        self.cells.last().expect("nonempty").0 - self.cells[0].0 + 1
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }
}

pub fn content(cell: (usize, usize)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

struct Grid<'a> {
    lam: &'a Partition,
    mu: &'a Partition,
    used: Vec<Vec<bool>>,
}

impl Grid<'_> {
    fn inside(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && r <= self.lam.len() && c > self.mu.part(r) as usize && c <= self.lam.part(r) as usize
    }

    fn free(&self, r: usize, c: usize) -> bool {
        self.inside(r, c) && !self.used[r - 1][c - 1]
    }

    fn first_free(&self) -> Option<(usize, usize)> {
        for r in 1..=self.lam.len() {
            for c in self.mu.part(r) as usize + 1..=self.lam.part(r) as usize {
                if !self.used[r - 1][c - 1] {
                    return Some((r, c));
                }
            }
        }
        None
    }

    fn set(&mut self, cells: &[(usize, usize)], v: bool) {
        for &(r, c) in cells {
            self.used[r - 1][c - 1] = v;
        }
    }
}

/// Ribbons of size `k` whose lowest row starts at `x`: `b` cells to the right
/// of `x`, then a path leaving `x` upward and continuing up or left.
fn ribbons_at(g: &Grid, x: (usize, usize), k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let (r, c) = x;
    for b in 0..k {
        if !(1..=b).all(|d| g.free(r, c + d)) {
            break;
        }
        let base: Vec<(usize, usize)> = (0..=b).map(|d| (r, c + d)).collect();
        let rest = k - 1 - b;
        if rest == 0 {
            out.push(base);
            continue;
        }
        // first step goes up from x
        let mut stack = vec![(base.clone(), (r, c), true)];
        while let Some((cells, last, first)) = stack.pop() {
            if cells.len() == k {
                out.push(cells);
                continue;
            }
            let up = (last.0 + 1, last.1);
            if g.free(up.0, up.1) {
                let mut v = cells.clone();
                v.push(up);
                stack.push((v, up, false));
            }
            if !first && last.1 > 1 {
                let left = (last.0, last.1 - 1);
                if g.free(left.0, left.1) {
                    let mut v = cells.clone();
                    v.push(left);
                    stack.push((v, left, false));
                }
            }
        }
    }
    out
}

/// Every tiling of `lam / mu` by `k`-ribbons for which `accept` holds on each
/// ribbon. Both partitions must have the same part count.
pub fn ribbon_tilings(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    accept: &dyn Fn(&Ribbon) -> bool,
) -> Vec<Vec<Ribbon>> {
    let mut out = Vec::new();
    if k == 0 || !lam.contains(mu) || !((lam.size() - mu.size()) as usize).is_multiple_of(k) {
        return out;
    }
    let width = lam.largest() as usize;
    let mut g = Grid { lam, mu, used: vec![vec![false; width]; lam.len()] };
    let mut cur = Vec::new();
    fn rec(
        g: &mut Grid,
        k: usize,
        accept: &dyn Fn(&Ribbon) -> bool,
        cur: &mut Vec<Ribbon>,
        out: &mut Vec<Vec<Ribbon>>,
    ) {
        let Some(x) = g.first_free() else {
            let mut t = cur.clone();
            t.sort();
            out.push(t);
            return;
        };
        for cells in ribbons_at(g, x, k) {
            let rib = Ribbon::new(cells);
            if !accept(&rib) {
                continue;
            }
            g.set(rib.cells(), true);
            cur.push(rib);
            rec(g, k, accept, cur, out);
            let rib = cur.pop().expect("pushed");
            g.set(rib.cells(), false);
        }
    }
    rec(&mut g, k, accept, &mut cur, &mut out);
    out
}

/// The head of `rib` touches the southern boundary of `lam / mu`.
pub fn head_on_south(rib: &Ribbon, mu: &Partition) -> bool {
    let (r, c) = rib.head();
    r == 1 || c <= mu.part(r - 1) as usize
}

/// The tail of `rib` touches the western boundary of `lam / mu`.
pub fn tail_on_west(rib: &Ribbon, mu: &Partition) -> bool {
    let (r, c) = rib.tail();
    c == 1 || c - 1 <= mu.part(r) as usize
}

/// Horizontal `k`-ribbon strips of shape `lam / mu`.
pub fn enum_hrs(mu: &Partition, lam: &Partition, k: usize) -> Vec<Vec<Ribbon>> {
    ribbon_tilings(lam, mu, k, &|r| head_on_south(r, mu))
}

/// Vertical `k`-ribbon strips of shape `lam / mu`.
pub fn enum_vrs(mu: &Partition, lam: &Partition, k: usize) -> Vec<Vec<Ribbon>> {
    ribbon_tilings(lam, mu, k, &|r| tail_on_west(r, mu))
}
