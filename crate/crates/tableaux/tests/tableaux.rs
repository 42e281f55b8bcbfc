use std::collections::BTreeMap;

use llt_algebra::{Poly, VarSet};
use llt_shapes::*;
use llt_tableaux::*;
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    parse_partition(s).unwrap()
}

fn skew(s: &str) -> SkewTuple {
    parse_skew_tuple(s).unwrap()
}

fn lab(s: &str) -> SuperLabel {
    s.parse().unwrap()
}

fn cell(shape: usize, row: usize, col: usize) -> Cell {
    Cell { shape, row, col }
}

fn four_shape_tableau() -> SuperTableau {
    let shape = skew("((3,1),(2,2,2),(1),(2,1)) / ((),(1,1,1),(),(2))");
    let pairs = [
        (cell(0, 1, 1), 2),
        (cell(0, 1, 2), 5),
        (cell(0, 1, 3), 9),
        (cell(0, 2, 1), 8),
        (cell(1, 1, 2), 1),
        (cell(1, 2, 2), 4),
        (cell(1, 3, 2), 6),
        (cell(2, 1, 1), 7),
        (cell(3, 2, 1), 3),
    ];
    SuperTableau::from_pairs(shape, pairs.iter().map(|&(c, v)| (c, SuperLabel::plain(v)))).unwrap()
}

/// Values `(a, b, c)` of the coinversion triples, with 0 and `u32::MAX` for
/// cells outside the shape.
fn coinversion_values(t: &SuperTableau) -> Vec<(u32, u32, u32)> {
    let val = |c: Option<Cell>, outside: u32| {
        c.and_then(|c| t.get(c)).map_or(outside, |l| l.value)
    };
    let mut out: Vec<_> = triples(t.shape())
        .into_iter()
        .map(|tr| (val(tr.u, 0), val(Some(tr.v), 0), val(tr.w, u32::MAX)))
        .filter(|&(a, b, c)| a <= b && b <= c)
        .collect();
    out.sort();
    out
}

#[test]
fn four_shape_tuple_coinversions() {
    let t = four_shape_tableau();
    let inf = u32::MAX;
    let listed = [(0, 2, 4), (0, 2, 7), (3, 4, inf), (0, 4, 7), (4, 5, inf), (1, 9, inf), (0, 9, inf)];
    let found = coinversion_values(&t);
    for x in listed {
        assert!(found.contains(&x), "{x:?} missing");
    }
    // Padding (1) and the rows of the other shapes to three parts adds
    // three more triples; the lattice count agrees with these ten.
    let mut extra: Vec<_> = found.iter().filter(|x| !listed.contains(x)).copied().collect();
    extra.sort();
    assert_eq!(extra, vec![(0, 6, inf), (0, 8, inf), (3, 7, inf)]);
    assert_eq!(coinv(&t), 10);
    let n = count_triples(t.shape());
    assert!(coinv(&t) + inv(&t) <= n);
}

#[test]
fn label_order_and_parsing() {
    assert!(lab("3") < lab("1'"));
    assert!(lab("1'") < lab("2'"));
    assert_eq!(lab("4'").to_string(), "4'");
    assert!("0".parse::<SuperLabel>().is_err());
    assert_eq!(alphabet(2, 1), vec![lab("1"), lab("2"), lab("1'")]);
}

#[test]
fn sssyt_counts_of_known_shapes() {
    assert_eq!(enum_sssyt(&skew("((1),(2))"), 1, 1).len(), 4);
    assert_eq!(enum_sssyt(&skew("((1),(3),(2))"), 1, 1).len(), 8);
    let empty = enum_sssyt(&skew("((),())"), 2, 2);
    assert_eq!(empty.len(), 1);
    assert!(empty[0].labels().is_empty());
}

#[test]
fn sssyt_rules() {
    let shape = skew("((2,1))");
    // primed entries may repeat down a column but not along a row
    let ok = SuperTableau::new(shape.clone(), vec![lab("1'"), lab("2'"), lab("1'")]);
    assert!(ok.is_ok());
    let bad = SuperTableau::new(shape.clone(), vec![lab("1'"), lab("1'"), lab("2'")]);
    assert!(bad.is_err());
    let bad = SuperTableau::new(shape, vec![lab("1"), lab("1"), lab("1")]);
    assert!(bad.is_err());
}

#[test]
fn sssyt_with_primes_only_is_conjugate_ssyt() {
    // fillings by 1'..m' of a shape match ssyt of the conjugate shape
    for s in ["((2,1))", "((3,1))", "((2,2))", "((3,2,1))"] {
        let t = skew(s);
        let lam = &t.lam()[0];
        let conj = SkewTuple::straight(vec![lam.conjugate(lam.largest() as usize).unwrap()]).unwrap();
        for m in 1..4 {
            assert_eq!(enum_sssyt(&t, 0, m).len(), enum_sssyt(&conj, m, 0).len(), "{s} m={m}");
        }
    }
}

#[test]
fn coinv_llt_small_values() {
    let vars = VarSet::families(1, 0, 0, 0, &[]);
    let l = coinv_llt(&skew("((1),(2))"), 1);
    assert_eq!(l, Poly::parse(&vars, "t*x1^3").unwrap());
    let e = coinv_llt(&skew("((),())"), 3);
    assert!(e.is_one());
}

#[test]
fn coinv_llt_is_symmetric_in_two_variables() {
    for s in ["((1),(2))", "((2),(1))", "((1,1),(1))", "((2,1),(1,0)) / ((1,0),(0,0))"] {
        let l = coinv_llt(&skew(s), 2);
        assert_eq!(l.swap_vars(&[("x1", "x2")]).unwrap(), l, "{s}");
    }
}

#[test]
fn triple_count_is_max_coinv_plus_min_inv() {
    for s in ["((1),(2))", "((2,1),(1))", "((1),(1),(1))", "((2),(1,1)) / ((1),(0))"] {
        let shape = skew(s);
        let n = shape.size() as usize;
        let all = enum_sssyt(&shape, n, 0);
        let co: Vec<usize> = all.iter().map(coinv).collect();
        let iv: Vec<usize> = all.iter().map(inv).collect();
        let m = count_triples(&shape);
        assert_eq!(m, co.iter().max().unwrap() + iv.iter().min().unwrap(), "{s}");
        assert_eq!(m, co.iter().min().unwrap() + iv.iter().max().unwrap(), "{s}");
    }
}

fn skew_pairs(p: usize, max: u32, max_size: u32) -> Vec<(Partition, Partition)> {
    let all = partitions_in_box(p, max);
    let mut out = Vec::new();
    for lam in &all {
        for mu in &all {
            if lam.contains(mu) && lam.size() - mu.size() <= max_size {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

#[test]
fn ribbon_strips_are_unique() {
    for k in 1..=3 {
        for (lam, mu) in skew_pairs(4, 4, 12) {
            assert!(enum_hrs(&mu, &lam, k).len() <= 1, "hrs {lam}/{mu} k={k}");
            assert!(enum_vrs(&mu, &lam, k).len() <= 1, "vrs {lam}/{mu} k={k}");
        }
    }
    let mu = part("(2,1)");
    assert_eq!(enum_hrs(&mu, &mu, 3), vec![Vec::<Ribbon>::new()]);
}

#[test]
fn horizontal_strip_of_six_six_three() {
    let h = enum_hrs(&part("(0,0,0)"), &part("(6,6,3)"), 3);
    assert_eq!(h.len(), 1);
    for r in &h[0] {
        assert!(head_on_south(r, &part("(0,0,0)")));
    }
    assert_eq!(h[0].len(), 5);
}

/// Rows contiguous, and each row above starts exactly where the row below
/// ends (a lattice path running down and right).
fn is_ribbon(cells: &[(usize, usize)]) -> bool {
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(r, c) in cells {
        rows.entry(r).or_default().push(c);
    }
    let keys: Vec<usize> = rows.keys().copied().collect();
    if keys.windows(2).any(|w| w[1] != w[0] + 1) {
        return false;
    }
    for cols in rows.values_mut() {
        cols.sort();
        if cols.windows(2).any(|w| w[1] != w[0] + 1) {
            return false;
        }
    }
    keys.windows(2).all(|w| rows[&w[0]][0] == *rows[&w[1]].last().unwrap())
}

fn brute_tilings(free: &mut Vec<(usize, usize)>, k: usize) -> usize {
    if free.is_empty() {
        return 1;
    }
    let first = free.remove(0);
    let mut total = 0;
    let rest = free.clone();
    let n = rest.len();
    // choose k-1 further cells
    let mut idx: Vec<usize> = (0..k.saturating_sub(1)).collect();
    loop {
        if idx.len() <= n {
            let mut group = vec![first];
            group.extend(idx.iter().map(|&i| rest[i]));
            if is_ribbon(&group) {
                let mut left: Vec<(usize, usize)> =
                    rest.iter().enumerate().filter(|(i, _)| !idx.contains(i)).map(|x| *x.1).collect();
                total += brute_tilings(&mut left, k);
            }
        } else {
            break;
        }
        // next combination
        let m = idx.len();
        let mut j = m;
        while j > 0 && idx[j - 1] == n - m + j - 1 {
            j -= 1;
        }
        if j == 0 {
            break;
        }
        idx[j - 1] += 1;
        for l in j..m {
            idx[l] = idx[l - 1] + 1;
        }
    }
    free.insert(0, first);
    total
}

#[test]
fn tiler_matches_brute_force() {
    for k in 1..=3 {
        for (lam, mu) in skew_pairs(3, 4, 6) {
            let tilings = ribbon_tilings(&lam, &mu, k, &|_| true).len();
            let mut cells: Vec<(usize, usize)> =
                lam.cells().into_iter().filter(|&(r, c)| !mu.has_cell(r, c)).collect();
            cells.sort();
            let want = if cells.len().is_multiple_of(k) { brute_tilings(&mut cells, k) } else { 0 };
            assert_eq!(tilings, want, "{lam}/{mu} k={k}");
        }
    }
}

#[test]
fn g_of_eight_seven_three() {
    let g = super_ribbon_g(&part("(8,7,3)"), &part("()"), 3, 1, 1).unwrap();
    let vars = VarSet::families(1, 1, 0, 0, &[]);
    let want = Poly::parse(
        &vars,
        "t^5*x1^5*y1 + t^3*x1^4*y1^2 + t^9*x1^6 + t^7*x1^5*y1 + t^5*x1^4*y1^2 \
         + t^3*x1^3*y1^3 + t^9*x1^5*y1 + t^7*x1^4*y1^2",
    )
    .unwrap();
    assert_eq!(g, want);
    assert!(super_ribbon_g(&part("()"), &part("()"), 3, 2, 2).unwrap().is_one());
    assert!(super_ribbon_g(&part("(2)"), &part("()"), 3, 2, 2).unwrap().is_zero());
}

/// A super ribbon tableau of shape (8,7,6,6,6,4,1)/(2), given by
/// one marked cell per ribbon.
fn twelve_ribbon_tableau() -> RibbonTableau {
    let marks: BTreeMap<(usize, usize), &str> = [
        ((4, 1), "1"),
        ((7, 1), "2"),
        ((2, 2), "1"),
        ((3, 2), "2"),
        ((4, 2), "3"),
        ((6, 2), "1'"),
        ((6, 3), "2'"),
        ((2, 4), "1"),
        ((4, 5), "1'"),
        ((5, 5), "3'"),
        ((3, 6), "3'"),
        ((2, 7), "4'"),
    ]
    .into_iter()
    .collect();
    let lam = part("(8,7,6,6,6,4,1)");
    let mu = part("(2,0,0,0,0,0,0)");
    let one_mark = |r: &Ribbon| r.cells().iter().filter(|c| marks.contains_key(c)).count() == 1;
    let tilings = ribbon_tilings(&lam, &mu, 3, &one_mark);
    assert_eq!(tilings.len(), 1);
    let ribbons = tilings[0]
        .iter()
        .map(|r| {
            let m = r.cells().iter().find(|c| marks.contains_key(c)).unwrap();
            (r.clone(), lab(marks[m]))
        })
        .collect();
    RibbonTableau::new(lam, mu, 3, ribbons).unwrap()
}

#[test]
fn twelve_ribbon_tableau_spin_and_weight() {
    let t = twelve_ribbon_tableau();
    assert_eq!(t.spin(), 14);
    let vars = VarSet::families(3, 4, 0, 0, &[]);
    let want = Poly::parse(&vars, "t^14*x1^3*x2^2*x3*y1^2*y2*y3^2*y4").unwrap();
    assert_eq!(t.monomial(&vars).unwrap(), want);
}

#[test]
fn twelve_ribbon_littlewood_image() {
    let t = twelve_ribbon_tableau();
    let img = littlewood_map(&t).unwrap();
    let want: Vec<(Cell, SuperLabel)> = [
        (cell(0, 1, 1), "1"),
        (cell(0, 2, 1), "2"),
        (cell(0, 1, 2), "1"),
        (cell(0, 2, 2), "2'"),
        (cell(0, 1, 3), "3'"),
        (cell(0, 2, 3), "3'"),
        (cell(1, 1, 1), "3"),
        (cell(1, 1, 2), "1'"),
        (cell(2, 1, 1), "1"),
        (cell(2, 1, 2), "4'"),
        (cell(2, 2, 1), "2"),
        (cell(2, 3, 1), "1'"),
    ]
    .iter()
    .map(|&(c, l)| (c, lab(l)))
    .collect();
    let mut got: Vec<(Cell, SuperLabel)> = img.entries().collect();
    got.sort();
    let mut want = want;
    want.sort();
    assert_eq!(got, want);
    let back = littlewood_inverse(&img, t.lam(), t.mu(), 3).unwrap();
    assert_eq!(back, t);
}

#[test]
fn littlewood_map_is_a_bijection_on_small_shapes() {
    let mut checked = 0;
    for k in 1..=3 {
        for (lam, mu) in skew_pairs(3, 4, 9) {
            let size = (lam.size() - mu.size()) as usize;
            if !size.is_multiple_of(k) {
                continue;
            }
            let Ok(q) = skew_k_quotient(&lam, &mu, k) else { continue };
            let (n, m) = if size <= 4 { (2, 1) } else { (1, 1) };
            let srt = enum_srt(&lam, &mu, k, n, m).unwrap();
            let sssyt = enum_sssyt(&q, n, m);
            assert_eq!(srt.len(), sssyt.len(), "{lam}/{mu} k={k}");
            let mut images = Vec::new();
            for t in &srt {
                let img = littlewood_map(t).unwrap();
                assert_eq!(img.shape(), &q);
                assert_eq!(littlewood_inverse(&img, &lam, &mu, k).unwrap(), *t);
                let mut a = t.labels();
                let mut b = img.labels().to_vec();
                a.sort();
                b.sort();
                assert_eq!(a, b);
                images.push(img);
            }
            images.sort_by_key(|x| x.labels().to_vec());
            images.dedup();
            assert_eq!(images.len(), srt.len());
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn empty_tableau_maps_to_empty() {
    let t = enum_srt(&part("(2,1)"), &part("(2,1)"), 2, 1, 1).unwrap();
    assert_eq!(t.len(), 1);
    let img = littlewood_map(&t[0]).unwrap();
    assert!(img.labels().is_empty());
}

#[test]
fn quotient_cells_transport_contents() {
    for k in 2..=3 {
        for (lam, mu) in skew_pairs(3, 5, 9) {
            let size = (lam.size() - mu.size()) as usize;
            if !size.is_multiple_of(k) || skew_k_quotient(&lam, &mu, k).is_err() {
                continue;
            }
            if size == k {
                // a single ribbon gives a single quotient cell
                let q = skew_k_quotient(&lam, &mu, k).unwrap();
                assert_eq!(q.size(), 1);
            }
            for t in enum_srt(&lam, &mu, k, 1, 1).unwrap() {
                let cells = ribbon_cells(&t).unwrap();
                let rs = t.ribbons();
                for a in 0..rs.len() {
                    for b in 0..rs.len() {
                        let (cu, cv) = (content(rs[a].0.tail()), content(rs[b].0.tail()));
                        if (cu - cv).rem_euclid(k as i64) != 0 {
                            continue;
                        }
                        assert_eq!(cells[a].shape, cells[b].shape);
                        assert_eq!((cu - cv) / k as i64, cells[a].content() - cells[b].content());
                    }
                }
            }
        }
    }
}

#[test]
fn primed_tableaux_are_conjugate_ribbon_tableaux() {
    for k in 2..=3 {
        for (lam, mu) in skew_pairs(3, 4, 9) {
            let size = (lam.size() - mu.size()) as usize;
            if !size.is_multiple_of(k) {
                continue;
            }
            let n = lam.largest() as usize;
            let (lc, mc) = (lam.conjugate(n).unwrap(), mu.conjugate(n).unwrap());
            for m in 1..=2 {
                let a = enum_srt(&lam, &mu, k, 0, m).unwrap();
                let b = enum_srt(&lc, &mc, k, m, 0).unwrap();
                assert_eq!(a.len(), b.len(), "{lam}/{mu} k={k}");
                let mut wa: Vec<Vec<u32>> = a.iter().map(|t| t.weight(0, m).1).collect();
                let mut wb: Vec<Vec<u32>> = b.iter().map(|t| t.weight(m, 0).0).collect();
                wa.sort();
                wb.sort();
                assert_eq!(wa, wb);
            }
        }
    }
}

#[test]
fn render_places_shapes_on_content_lines() {
    let t = enum_sssyt(&skew("((1),(2))"), 1, 0).pop().unwrap();
    let s = render_tableau(&t);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].trim_start().starts_with('1'));
    assert_eq!(lines[2].trim(), "1");
}

proptest! {
    #[test]
    fn coinv_llt_symmetry_random(
        a in prop::collection::vec(0u32..3, 2),
        b in prop::collection::vec(0u32..3, 2),
    ) {
        let mut a = a; a.sort_unstable_by(|x, y| y.cmp(x));
        let mut b = b; b.sort_unstable_by(|x, y| y.cmp(x));
        let shape = SkewTuple::straight(vec![Partition::new(a).unwrap(), Partition::new(b).unwrap()]).unwrap();
        let l = coinv_llt(&shape, 2);
        prop_assert_eq!(l.swap_vars(&[("x1", "x2")]).unwrap(), l);
    }
}
