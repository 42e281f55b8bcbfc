use llt_shapes::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn part(s: &str) -> Partition {
    parse_partition(s).unwrap()
}

fn tup(s: &str) -> Vec<Partition> {
    parse_tuple(s).unwrap()
}

fn random_partition(rng: &mut ChaCha8Rng, p: usize, max: u32) -> Partition {
    let mut v: Vec<u32> = (0..p).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).unwrap()
}

#[test]
fn maya_of_example_partition() {
    assert_eq!(maya(&part("(4,3,2,2,1)"), 9).unwrap().to_string(), "ESESSESES");
    assert_eq!(maya(&part("()"), 3).unwrap().to_string(), "EEE");
    assert!(maya(&part("(4,3,2,2,1)"), 8).is_err());
}

#[test]
fn maya_round_trip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = rng.gen_range(0..6);
        let x = random_partition(&mut rng, p, 6);
        let r = x.len() + x.largest() as usize + rng.gen_range(0..4);
        assert_eq!(from_maya(&maya(&x, r).unwrap()), x);
    }
}

#[test]
fn postpending_e_keeps_partition() {
    let m = MayaDiagram::parse("ESESSESES").unwrap();
    let m2 = MayaDiagram::parse("ESESSESESEEE").unwrap();
    assert_eq!(from_maya(&m), from_maya(&m2));
}

#[test]
fn three_quotient_example() {
    assert_eq!(k_quotient(&part("(4,3,2,2,1)"), 3), tup("((1,1),(0,0),(2))"));
    assert_eq!(k_quotient(&part("()"), 3), tup("((),(),())"));
}

#[test]
fn skew_quotients_of_known_shapes() {
    let q = skew_k_quotient(&part("(8,7,3)"), &part("()"), 3).unwrap();
    assert_eq!(q.to_string(), "((1),(3),(2))");
    let q = skew_k_quotient(&part("(4,2)"), &part("()"), 2).unwrap();
    assert_eq!(q.to_string(), "((1),(2))");
}

#[test]
fn quotient_stable_under_padding_by_k_rows() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let k = rng.gen_range(1..4);
        let p = rng.gen_range(1..5);
        let lam = random_partition(&mut rng, p, 6);
        let mu_raw = random_partition(&mut rng, p, 6);
        let mu = Partition::new(
            lam.parts().iter().zip(mu_raw.parts()).map(|(a, b)| *a.min(b)).collect(),
        )
        .unwrap();
        let Ok(q) = skew_k_quotient(&lam, &mu, k) else { continue };
        let extra = k * rng.gen_range(1..3);
        let q2 = skew_k_quotient(
            &lam.with_len(p + extra).unwrap(),
            &mu.with_len(p + extra).unwrap(),
            k,
        )
        .unwrap();
        // extra zero parts only
        assert!(q2.p() >= q.p());
        assert_eq!(q2, q.pad_rows(q2.p() - q.p()));
    }
}

#[test]
fn from_quotient_inverts_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let k = rng.gen_range(1..4);
        let p = rng.gen_range(0..6);
        let lam = random_partition(&mut rng, p, 7);
        let q = charged_quotient(&lam, &lam, k).unwrap();
        let back = from_quotient(&q.lam, q.maya_len / k).unwrap();
        assert_eq!(back, lam);
    }
}

#[test]
fn complement_example_and_involution() {
    let c = complement(&tup("((2,1,0),(1,1,1))"), 3, 4).unwrap();
    assert_eq!(c, tup("((3,3,3),(4,3,2))"));
    assert!(complement(&tup("((5))"), 1, 4).is_err());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let k = rng.gen_range(1..4);
        let l1 = rng.gen_range(0..5);
        let l2 = rng.gen_range(0..5);
        let t: Vec<Partition> = (0..k).map(|_| random_partition(&mut rng, l1, l2)).collect();
        let cc = complement(&complement(&t, l1, l2).unwrap(), l1, l2).unwrap();
        assert_eq!(cc, t);
    }
}

#[test]
fn conjugate_tuple_conventions() {
    assert_eq!(conjugate_tuple(&tup("((),())"), 0).unwrap(), tup("((),())"));
    assert_eq!(conjugate_tuple(&tup("((2,1),(3))"), 3).unwrap(), tup("((1,1,1),(2,1,0))"));
    let t = parse_skew_tuple("((2,1),(3,0))/((1,0),(1,0))").unwrap();
    let c = t.conjugate(3).unwrap();
    assert_eq!(c.conjugate(2).unwrap(), t);
}

#[test]
fn strip_extension_examples() {
    let b = |m, a| StripBounds { max_part: m, max_added: a };
    let e = strip_extensions(&tup("((0))"), StripKind::Horizontal, b(2, 2));
    assert_eq!(e, vec![tup("((0))"), tup("((1))"), tup("((2))")]);
    let e = strip_extensions(&tup("((1),(0))"), StripKind::Horizontal, b(9, 1));
    assert_eq!(e.len(), 4);
}

#[test]
fn strip_extensions_match_brute_force() {
    let mu = tup("((2,1,0),(1,0,0))");
    let bounds = StripBounds { max_part: 3, max_added: 9 };
    for kind in [StripKind::Horizontal, StripKind::Vertical] {
        let got = strip_extensions(&mu, kind, bounds);
        let mut want = Vec::new();
        for lam in tuples_in_box(2, 3, 3) {
            let st = SkewTuple::new(lam.clone(), mu.clone());
            if let Ok(st) = st {
                let ok = match kind {
                    StripKind::Horizontal => st.is_horizontal_strip(),
                    StripKind::Vertical => st.is_vertical_strip(),
                };
                if ok {
                    want.push(lam);
                }
            }
        }
        assert_eq!(got, want);
    }
}

#[test]
fn vertical_extensions_are_conjugated_horizontal_ones() {
    // single column shape (1,1,0) with room for a fourth row
    let mu = tup("((1,1,0,0))");
    let n = 2;
    let vert = strip_extensions(&mu, StripKind::Vertical, StripBounds { max_part: n, max_added: 9 });
    let conj_mu = conjugate_tuple(&mu, n as usize).unwrap();
    let hor = strip_extensions(&conj_mu, StripKind::Horizontal, StripBounds { max_part: 4, max_added: 9 });
    let mut back: Vec<Vec<Partition>> =
        hor.iter().map(|l| conjugate_tuple(l, 4).unwrap()).collect();
    back.sort();
    let mut vert = vert;
    vert.sort();
    assert_eq!(vert, back);
}

#[test]
fn parse_errors_and_display() {
    assert!(parse_partition("(1,2)").is_err());
    assert!(parse_partition("(1,").is_err());
    assert!(parse_skew_tuple("((1))/((2))").is_err());
    let t = parse_skew_tuple("((2,1),(1)) / ((1),())").unwrap();
    assert_eq!(t.to_string(), "((2,1),(1,0)) / ((1,0),(0,0))");
    assert_eq!(parse_tuple("[[1],[2]]").unwrap(), tup("((1),(2))"));
}

#[test]
fn contents_and_cells() {
    let t = parse_skew_tuple("((3,1),(2,2,2)) / ((1),(1,1,1))").unwrap();
    assert_eq!(t.size(), 6);
    let c: Vec<i64> = t.cells().iter().map(|c| c.content()).collect();
    assert_eq!(c, vec![1, 2, -1, 1, 0, -1]);
}

proptest! {
    #[test]
    fn quotient_sizes_add_up(parts in prop::collection::vec(0u32..7, 0..6), k in 1usize..4) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        let q = k_quotient(&lam, k);
        // |lam| = |core| + k * |quotient| with |core| >= 0
        let qs: u32 = q.iter().map(|x| x.size()).sum();
        prop_assert!(k as u32 * qs <= lam.size());
        // charges sum to the part count
        prop_assert_eq!(q.iter().map(|x| x.len()).sum::<usize>(), lam.len());
    }

    #[test]
    fn conjugation_is_involution(parts in prop::collection::vec(0u32..6, 0..6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        let n = lam.largest() as usize;
        prop_assert_eq!(lam.conjugate(n).unwrap().conjugate(lam.len()).unwrap(), lam);
    }
}
