use llt_cli::{run, run_suite, SuiteOpts};

fn llt(args: &str) -> llt_cli::Output {
    run(std::iter::once("llt").chain(args.split('|')))
}

#[test]
fn quotient_example() {
    let o = llt("quotient|--k|3|--shape|(4,3,2,2,1)");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.trim(), "((1,1),(0,0),(2))");
}

#[test]
fn skew_quotient_accepts_both_spellings() {
    let a = llt("quotient|--k|2|--shape|(4,2) / (2)");
    let b = llt("quotient|--k|2|--shape|(4,2)|--mu|(2)");
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(llt("quotient|--k|2|--shape|(4,2) / (2)|--mu|(1)").code, 2);
}

#[test]
fn domino_quotient_lattice_text() {
    let o = llt("lattice|--type|S|--shape|((1),(2))|--n|1|--m|1");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.trim(), "t*x1^3 + t*x1^2*y1 + x1^2*y1 + x1*y1^2");
}

#[test]
fn super_matches_lattice_and_ribbons() {
    let tab = llt("super|--shape|((1),(2))");
    assert_eq!(tab.stdout.trim(), "t*x1^3 + t*x1^2*y1 + x1^2*y1 + x1*y1^2");
    let g = llt("super|--k|2|--shape|(4,2)");
    assert_eq!(g.stdout.trim(), "t^2*x1^3 + t^2*x1^2*y1 + x1^2*y1 + x1*y1^2");
    let none = llt("super|--k|2|--shape|(3)");
    assert_eq!((none.code, none.stdout.trim()), (0, "0"));
}

#[test]
fn white_and_purple_lattices() {
    let w = llt("lattice|--type|W|--shape|((1),(1))|--n|2");
    let c = llt("coinv|--shape|((1),(1))|--n|2");
    assert_eq!(w.code, 0, "{}", w.stderr);
    assert_eq!(w.stdout, c.stdout);
    let p = llt("lattice|--type|P|--shape|((1),(1))|--n|2");
    assert_eq!(p.code, 0, "{}", p.stderr);
    assert_ne!(p.stdout, w.stdout);
}

#[test]
fn json_carries_schema() {
    for args in [
        "quotient|--k|3|--shape|(4,3,2,2,1)|--format|json",
        "lattice|--shape|((1),(2))|--format|json",
        "stats|--k|3|--shape|(8,7,3)|--format|json",
        "verify|ybe|--k|1|--format|json",
        "cauchy|c1|--format|json",
    ] {
        let o = llt(args);
        assert_eq!(o.code, 0, "{args}: {}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["schema"], 1, "{args}");
    }
}

#[test]
fn json_polynomial_terms() {
    let o = llt("lattice|--shape|((1),(2))|--format|json");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    assert_eq!(v["terms"][0]["coeff"], "1");
}

#[test]
fn stats_of_triomino_shape() {
    let o = llt("stats|--k|3|--shape|(8,7,3)");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("quotient: ((1),(3),(2))"), "{}", o.stdout);
    assert!(o.stdout.contains("box: 1/2"), "{}", o.stdout);
    let t = llt("stats|--shape|((1),(2))");
    assert!(t.stdout.contains("super tableaux (n=1, m=1): 4"), "{}", t.stdout);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(llt("verify|ybe|--k|1").code, 0);
    assert_eq!(llt("verify|weights|--k|2").code, 0);
    let o = llt("verify|nonsense");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("unknown suite"));
}

#[test]
fn cauchy_subcommand() {
    let o = llt("cauchy|ss|--k|2|--degree|2");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("PASS ss"), "{}", o.stdout);
    let o = llt("cauchy|c1|--shape|((1),())|--mu|((),())|--degree|3");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(llt("cauchy|c7").code, 2);
    assert_eq!(llt("cauchy|c1|--shape|((1))|--mu|((),())").code, 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "quotient|--k|3|--shape|(4,3,2",
        "quotient|--k|3|--shape|(1,2)",
        "quotient|--k|3",
        "quotient|--k|0|--shape|(1)",
        "lattice|--type|Q|--shape|((1))",
        "lattice|--shape|((1))|--bogus",
        "frobnicate",
        "super|--k|2",
    ] {
        let o = llt(args);
        assert_eq!(o.code, 2, "{args}: {}", o.stdout);
        assert!(!o.stderr.is_empty(), "{args}");
    }
}

#[test]
fn help_exits_zero() {
    let o = llt("--help");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("quotient"));
}

#[test]
fn output_is_deterministic() {
    for args in ["verify|box|--seed|7|--format|json", "stats|--k|2|--shape|(4,2)|--format|json", "verify|algebra|--seed|3"] {
        assert_eq!(llt(args), llt(args), "{args}");
    }
}

#[test]
fn seeds_change_random_sweeps() {
    let a = llt("verify|box|--seed|1|--format|json");
    let b = llt("verify|box|--seed|2|--format|json");
    assert_eq!((a.code, b.code), (0, 0));
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn ribbon_function_relation_on_random_shapes() {
    for seed in 0..3 {
        let r = run_suite("box", &SuiteOpts { seed, ..SuiteOpts::default() }).unwrap();
        assert!(r.len() >= 10);
        assert!(r.iter().all(|x| x.pass), "{r:?}");
    }
}

#[test]
fn verify_all_runs_in_order() {
    let o = llt("verify|all");
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    let order: Vec<&str> = o.stdout.lines().filter_map(|l| l.split(':').next()).collect();
    assert_eq!(order, llt_cli::ORDER.to_vec());
    let progress: Vec<&str> = o.stderr.lines().collect();
    assert_eq!(progress.len(), llt_cli::ORDER.len());
}
