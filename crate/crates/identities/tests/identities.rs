use llt_identities::*;
use llt_shapes::{parse_tuple, partitions_in_box, tuples_in_box, Partition, SkewTuple};
use llt_tableaux::enum_srt;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn tuple(s: &str) -> Vec<Partition> {
    parse_tuple(s).unwrap()
}

fn assert_pass(r: &VerificationReport) {
    assert!(r.pass, "{r:?}");
}

/// Skew shapes `lam / mu` inside a `p x w` box with `|lam/mu|` a positive
/// multiple of `k` no larger than `max`.
fn ribbon_shapes(p: usize, w: u32, k: usize, max: u32) -> Vec<(Partition, Partition)> {
    let all = partitions_in_box(p, w);
    let mut out = Vec::new();
    for lam in &all {
        for mu in &all {
            let d = lam.size() as i64 - mu.size() as i64;
            if lam.contains(mu) && d > 0 && d as u32 <= max && (d as usize).is_multiple_of(k) {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

#[test]
fn ybe_and_weight_tables_small_k() {
    for k in 1..=2 {
        for which in Ybe::ALL {
            assert_pass(&verify_ybe(which, k));
        }
    }
    for k in 1..=3 {
        assert_pass(&verify_weight_tables(k));
    }
}

#[test]
fn g_of_empty_is_zero() {
    assert_eq!(g(&tuple("((),())")).unwrap(), 0);
}

#[test]
fn g_tilde_rejects_non_strips() {
    let s = SkewTuple::straight(tuple("((1,1))")).unwrap();
    assert!(matches!(g_tilde(&s), Err(IdentityError::NotStrip(_))));
}

#[test]
fn g_chain_independent_and_conjugate_invariant() {
    let mut seen = 0;
    for k in 1..=3 {
        for lam in tuples_in_box(k, 3, 3) {
            if lam.iter().map(Partition::size).sum::<u32>() > 6 {
                continue;
            }
            assert_pass(&check_g_chains(&lam).unwrap());
            assert_pass(&check_g_conjugate(&lam).unwrap());
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn strip_duality_and_xy_swap() {
    for k in 1..=2 {
        for lam in tuples_in_box(k, 2, 2) {
            for mu in strips_below(&lam) {
                let s = SkewTuple::new(lam.clone(), mu).unwrap();
                assert_pass(&check_strip_duality(&s).unwrap());
            }
            let s = SkewTuple::straight(lam.clone()).unwrap();
            assert_pass(&check_xy_swap(&s, 1, 1).unwrap());
        }
    }
}

#[test]
fn super_llt_properties() {
    let mut count = 0;
    for k in 1..=2 {
        for lam in tuples_in_box(k, 2, 2) {
            if lam.iter().map(Partition::size).sum::<u32>() > 4 {
                continue;
            }
            let s = SkewTuple::straight(lam).unwrap();
            for (n, m) in [(1, 1), (2, 1), (1, 2)] {
                for r in check_main3(&s, n, m).unwrap() {
                    assert_pass(&r);
                }
            }
            count += 1;
        }
    }
    assert!(count >= 20);
}

#[test]
fn domino_quotient_cancels() {
    let s = SkewTuple::straight(tuple("((1),(2))")).unwrap();
    assert_pass(&check_cancellation(&s, 1, 1).unwrap());
}

#[test]
fn factorization_and_eta_split() {
    for split in Split::all(2, 1, 1, 1, 1) {
        assert_pass(&check_factorization(&split, 1, 1).unwrap());
        assert_pass(&check_eta_split(&split, 1, 1).unwrap());
        assert_pass(&check_general_cancel(&split, 1, 1).unwrap());
    }
}

#[test]
fn single_row_swap() {
    assert_pass(&check_single_row_swap(&[2, 1], &[1, 2], 1, 1).unwrap());
    assert_pass(&check_single_row_swap(&[2, 1], &[2, 1], 1, 1).unwrap());
    for nu in [[3, 1, 0], [3, 0, 1], [1, 3, 0], [1, 0, 3], [0, 3, 1], [0, 1, 3]] {
        assert_pass(&check_single_row_swap(&[3, 1, 0], &nu, 1, 1).unwrap());
    }
    assert!(check_single_row_swap(&[2, 1], &[2, 2], 1, 1).is_err());
}

#[test]
fn inversions() {
    assert_eq!(inv_count(&[2, 1]), 1);
    assert_eq!(inv_count(&[3, 1, 0]), 3);
    assert_eq!(inv_count(&[0, 1, 3]), 0);
}

#[test]
fn l_equals_g_on_two_ribbon_shapes() {
    assert_eq!(twice_box(&part(&[4, 2]), &part(&[]), 2, 1, 1).unwrap(), Some(0));
    assert_pass(&check_l_equals_g(&part(&[4, 2]), &part(&[]), 2, 1, 1).unwrap());
    assert_eq!(twice_box(&part(&[8, 7, 3]), &part(&[]), 3, 1, 1).unwrap(), Some(1));
    assert_pass(&check_l_equals_g(&part(&[8, 7, 3]), &part(&[]), 3, 1, 1).unwrap());
}

#[test]
fn l_equals_g_sweep() {
    for k in 2..=3 {
        for (lam, mu) in ribbon_shapes(3, 4, k, 6) {
            if llt_shapes::aligned_k_quotient(&lam, &mu, k).is_err() {
                continue;
            }
            assert_pass(&check_l_equals_g(&lam, &mu, k, 1, 1).unwrap());
        }
    }
}

#[test]
fn other_forms() {
    let empty = other_form_constants(&part(&[]), &part(&[]), 2, 1).unwrap().unwrap();
    assert_eq!((empty.triples, empty.max_inv, empty.twice_star, empty.twice_dagger), (0, 0, 0, 0));
    for k in 1..=2 {
        for (lam, mu) in ribbon_shapes(3, 3, k, 4) {
            if enum_srt(&lam, &mu, k, 1, 0).unwrap().is_empty() {
                continue;
            }
            for r in check_other_forms(&lam, &mu, k, 2).unwrap() {
                assert_pass(&r);
            }
        }
    }
}

#[test]
fn d_statistics_trivial_cases() {
    let lam = tuple("((2,1))");
    let mu = tuple("((1))");
    assert_eq!(d_stat(&lam, &mu, 1, 3, 3).unwrap(), 0);
    assert_eq!(dp_stat(&lam, &mu).unwrap(), 0);
    let lam = tuple("((2),(1))");
    assert_eq!(dp_stat(&lam, &lam).unwrap(), 0);
}

#[test]
fn star_forms_and_stability() {
    for k in 1..=2 {
        let small: Vec<_> = tuples_in_box(k, 2, 2)
            .into_iter()
            .filter(|t| t.iter().map(Partition::size).sum::<u32>() <= 3)
            .collect();
        for lam in &small {
            for mu in &small {
                if !lam.iter().zip(mu).all(|(a, b)| a.contains(b)) {
                    continue;
                }
                for r in check_star_stability(lam, mu, 1).unwrap() {
                    assert_pass(&r);
                }
            }
        }
    }
}

#[test]
fn empty_star_is_prefactor() {
    let mu = tuple("((1),())");
    let (l1, l2) = gray_thresholds(&mu, &mu, 1);
    assert_pass(&check_l_star(&mu, &mu, 1, l1, l2).unwrap());
    let (l1, l2) = light_thresholds(&mu, &mu, 1);
    assert_pass(&check_lp_star(&mu, &mu, 1, l1, l2).unwrap());
}

#[test]
fn cauchy_degree_zero_and_three() {
    let zero = vec![part(&[])];
    for which in Cauchy::ALL {
        assert_pass(&check_cauchy(which, &zero, &zero, VarCounts::ONE, 0).unwrap());
        assert_pass(&check_cauchy(which, &zero, &zero, VarCounts::ONE, 3).unwrap());
    }
    let zero2 = tuple("((),())");
    assert_pass(&check_cauchy(Cauchy::C1, &zero2, &zero2, VarCounts::ONE, 3).unwrap());
}

#[test]
fn cauchy_skew_sweep() {
    let small: Vec<_> = tuples_in_box(2, 1, 1);
    for which in Cauchy::ALL {
        for mu in &small {
            for nu in &small {
                assert_pass(&check_cauchy(which, mu, nu, VarCounts::ONE, 3).unwrap());
            }
        }
    }
}

#[test]
fn cauchy_names_round_trip() {
    for which in Cauchy::ALL {
        assert_eq!(which.name().parse::<Cauchy>().unwrap(), which);
    }
    assert!("c9".parse::<Cauchy>().is_err());
}

#[test]
fn local_flips() {
    for k in 1..=3 {
        assert_pass(&check_cancellation_flip(k));
        assert_pass(&check_corner_flip(k));
    }
}

#[test]
fn bijection_sweep() {
    for k in 1..=3 {
        for (lam, mu) in ribbon_shapes(3, 4, k, 6) {
            assert_pass(&check_bijections(&lam, &mu, k, 1, 1).unwrap());
            let single = enum_srt(&lam, &mu, k, 1, 0).unwrap();
            if single.is_empty() {
                continue;
            }
            assert_pass(&check_theta_commutes(&lam, &mu, k).unwrap());
            if single.len() == 1 && single[0].ribbons().len() == 1 {
                assert_pass(&check_content_transport(&lam, &mu, k).unwrap());
            }
        }
    }
}

#[test]
fn conjugate_tableau_transposes_and_primes() {
    let lam = part(&[2]);
    let mu = part(&[]);
    let t = enum_srt(&lam, &mu, 2, 1, 0).unwrap().remove(0);
    let c = conjugate_ribbon_tableau(&t).unwrap();
    assert_eq!(c.lam().parts().iter().filter(|&&x| x > 0).count(), 2);
    assert!(c.ribbons()[0].1.primed);
}

#[test]
fn content_transport_rejects_non_ribbons() {
    assert!(check_content_transport(&part(&[2, 2]), &part(&[]), 2).is_err());
}
