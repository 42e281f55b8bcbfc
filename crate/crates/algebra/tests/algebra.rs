use llt_algebra::*;
use proptest::prelude::*;
use std::sync::Arc;

fn v() -> Arc<VarSet> {
    VarSet::families(2, 2, 1, 1, &[])
}

fn p(s: &str) -> Poly {
    Poly::parse(&v(), s).unwrap()
}

fn r(s: &str) -> RationalFn {
    RationalFn::from_poly(p(s))
}

#[test]
fn additive_inverse() {
    assert_eq!(&p("x1 + t") + &p("-t"), p("x1"));
}

#[test]
fn difference_of_squares() {
    assert_eq!(&p("1 + t") * &p("1 - t"), p("1 - t^2"));
}

#[test]
fn domino_polynomial_vanishes_at_y_equals_minus_x() {
    let f = p("x1^2*y1 + x1*y1^2 + t*x1^3 + t*x1^2*y1");
    let g = substitute(&f, "y1", &r("-x1")).unwrap();
    assert!(g.is_zero());
}

#[test]
fn domino_polynomial_t_free_part_cancels() {
    let f = p("x1^2*y1 + x1*y1^2");
    let g = f.subs("y1", &p("-x1")).unwrap();
    assert!(g.is_zero());
}

#[test]
fn subs_t_inverse() {
    let f = p("t*x1^3");
    let g = substitute(&f, "t", &r("t^-1")).unwrap();
    assert_eq!(g.to_poly().unwrap(), p("t^-1*x1^3"));
    assert_eq!(g.to_poly().unwrap().to_string(), "t^-1*x1^3");
}

#[test]
fn subs_to_zero() {
    assert!(p("x1 + y1").subs("y1", &p("-x1")).unwrap().is_zero());
}

#[test]
fn pochhammer_small() {
    let x = r("x1");
    assert_eq!(pochhammer(&x, 0), r("1"));
    assert_eq!(pochhammer(&x, 1), r("1 - x1"));
    // oracle: (1-x)(1-xt) expanded by hand
    assert_eq!(pochhammer(&x, 2), r("1 - x1 - t*x1 + t*x1^2"));
    assert_eq!(pochhammer_poly(&p("x1"), 2), p("1 - x1 - t*x1 + t*x1^2"));
}

#[test]
fn phi_examples() {
    assert_eq!(phi(&[1, 0], &[0, 1]).unwrap(), 1);
    assert_eq!(phi(&[0, 1], &[1, 0]).unwrap(), 0);
    assert_eq!(phi(&[1, 1, 1], &[1, 1, 1]).unwrap(), 3);
    assert!(phi(&[1], &[1, 0]).is_err());
}

#[test]
fn phi_matches_pair_sum() {
    for a in 0..64u32 {
        for b in 0..64u32 {
            let i: Vec<i32> = (0..6).map(|s| ((a >> s) & 1) as i32).collect();
            let j: Vec<i32> = (0..6).map(|s| ((b >> s) & 1) as i32).collect();
            let mut brute = 0;
            for x in 0..6 {
                for y in x + 1..6 {
                    brute += i[x] * j[y];
                }
            }
            assert_eq!(phi(&i, &j).unwrap(), brute as i64);
        }
    }
}

#[test]
fn series_examples() {
    let vars = VarSet::new(&["x", "w"]).unwrap();
    let f = RationalFn::new(Poly::one(&vars), Poly::parse(&vars, "1 + x*w").unwrap()).unwrap();
    let s = series_expand(&f, &["x", "w"], 2).unwrap();
    assert_eq!(s.poly(), &Poly::parse(&vars, "1 - x*w").unwrap());

    let g = RationalFn::new(
        Poly::parse(&vars, "1 - x*w").unwrap(),
        Poly::parse(&vars, "1 + x*w").unwrap(),
    )
    .unwrap();
    let s = series_expand(&g, &["x", "w"], 4).unwrap();
    assert_eq!(s.poly(), &Poly::parse(&vars, "1 - 2*x*w + 2*x^2*w^2").unwrap());

    let s = series_expand(&RationalFn::one(&vars), &["x"], 3).unwrap();
    assert_eq!(s.poly(), &Poly::one(&vars));
}

#[test]
fn series_with_t_unit_at_origin() {
    let vars = VarSet::new(&["x"]).unwrap();
    // 1/(t + x) = t^-1 - t^-2 x + t^-3 x^2 - ...
    let f = RationalFn::new(Poly::one(&vars), Poly::parse(&vars, "t + x").unwrap()).unwrap();
    let s = series_expand(&f, &["x"], 2).unwrap();
    assert_eq!(s.poly(), &Poly::parse(&vars, "t^-1 - t^-2*x + t^-3*x^2").unwrap());
    let bad = RationalFn::new(Poly::one(&vars), Poly::parse(&vars, "1 + t + x").unwrap()).unwrap();
    assert!(series_expand(&bad, &["x"], 2).is_err());
}

#[test]
fn mismatched_varsets_error() {
    let a = Poly::parse(&VarSet::new(&["x"]).unwrap(), "x").unwrap();
    let b = Poly::parse(&VarSet::new(&["y"]).unwrap(), "y").unwrap();
    assert_eq!(a.checked_add(&b), Err(AlgebraError::VarSetMismatch));
    assert!(a.checked_mul(&b).is_err());
}

#[test]
fn text_round_trip_and_order() {
    let f = p("x1^2*y1 + x1*y1^2 + t*x1^3 + t*x1^2*y1");
    assert_eq!(f.to_string(), "t*x1^3 + t*x1^2*y1 + x1^2*y1 + x1*y1^2");
    assert_eq!(Poly::parse(&v(), &f.to_string()).unwrap(), f);
    let g = p("-3*x1^-2*w1 + 7 - t^-1");
    assert_eq!(Poly::parse(&v(), &g.to_string()).unwrap(), g);
    assert_eq!(p("0").to_string(), "0");
}

#[test]
fn json_round_trip() {
    let f = p("-12345678901234567890*x1^2*y1^-1 + t");
    let js = serde_json::to_string(&f.to_json()).unwrap();
    let back: Vec<JsonTerm> = serde_json::from_str(&js).unwrap();
    assert_eq!(Poly::from_json(&v(), &back).unwrap(), f);
}

#[test]
fn rational_cancellation_and_equality() {
    let a = RationalFn::new(p("1 - t^2"), p("1 + t")).unwrap();
    assert_eq!(a.to_poly().unwrap(), p("1 - t"));
    let b = RationalFn::new(p("x1"), p("x1 + y1")).unwrap();
    let c = RationalFn::new(p("2*x1*t"), p("2*t*x1 + 2*t*y1")).unwrap();
    assert_eq!(b, c);
    let sum = &b + &RationalFn::new(p("y1"), p("x1 + y1")).unwrap();
    assert_eq!(sum.to_poly().unwrap(), p("1"));
    let inv = b.inv().unwrap();
    assert_eq!(&inv * &b, r("1"));
    assert!(RationalFn::new(p("1"), p("0")).is_err());
}

#[test]
fn rational_substitute() {
    let f = RationalFn::new(p("x1"), p("1 + x1*y1")).unwrap();
    let g = f.substitute("x1", &RationalFn::new(p("1"), p("y1")).unwrap()).unwrap();
    assert_eq!(g, RationalFn::new(p("1"), p("2*y1")).unwrap());
}

#[test]
fn exact_division() {
    let a = p("x1^2 - y1^2");
    assert_eq!(a.div_exact(&p("x1 - y1")).unwrap(), p("x1 + y1"));
    assert!(a.div_exact(&p("x1 + 2*y1")).is_none());
    let b = p("t^-1*x1 + t^-2*y1");
    assert_eq!(b.div_exact(&p("t*x1 + y1")).unwrap(), p("t^-2"));
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(-2i32..=2, 3)), 0..5).prop_map(|ts| {
        let vars = VarSet::new(&["x", "y"]).unwrap();
        Poly::from_terms(&vars, ts.into_iter().map(|(c, e)| (e, c.into())))
    })
}

fn shared(p: Poly) -> Poly {
    // re-home onto one shared variable set
    p.embed(&VAR.with(|v| v.clone())).unwrap()
}

thread_local! {
    static VAR: Arc<VarSet> = VarSet::new(&["x", "y"]).unwrap();
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        let (a, b, c) = (shared(a), shared(b), shared(c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn t_inversion_is_involution(a in small_poly()) {
        let a = shared(a);
        let vars = a.vars().clone();
        let tinv = Poly::t_pow(&vars, -1);
        let once = a.subs("t", &tinv).unwrap();
        prop_assert_eq!(once.subs("t", &tinv).unwrap(), a);
    }

    #[test]
    fn rational_equality_is_congruence(a in small_poly(), b in small_poly(), c in small_poly(), d in small_poly()) {
        let (a, b, c, d) = (shared(a), shared(b), shared(c), shared(d));
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = RationalFn::new(a.clone(), b.clone()).unwrap();
        let y = RationalFn::new(c.clone(), d.clone()).unwrap();
        let cross = (&(&a * &d) - &(&c * &b)).is_zero();
        prop_assert_eq!(x == y, cross);
        // (a/b)(b/a) = 1 whenever a != 0
        if !a.is_zero() {
            let z = RationalFn::new(b.clone(), a.clone()).unwrap();
            prop_assert_eq!(&x * &z, RationalFn::one(a.vars()));
        }
        // (a/b + c/d) - c/d = a/b
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn series_times_den_is_num(a in small_poly(), k in 0u32..3, cap in 0i64..5) {
        let a = shared(a);
        let vars = a.vars().clone();
        // numerators must have nonnegative degree in the capped variables
        let a = a.shift(&[0, 2, 2]);
        let den = Poly::parse(&vars, "1 - x*y*t + x^2").unwrap().pow(k);
        let f = RationalFn::new(a.clone(), den.clone()).unwrap();
        let s = series_expand(&f, &["x", "y"], cap).unwrap();
        let mask = s.mask().to_vec();
        prop_assert_eq!((s.poly() * &den).truncate(&mask, cap), a.truncate(&mask, cap));
    }

    #[test]
    fn text_round_trip(a in small_poly()) {
        let a = shared(a);
        prop_assert_eq!(Poly::parse(a.vars(), &a.to_string()).unwrap(), a);
    }
}
