mod common;

use common::{datum, reference_witnesses, w};
use lieflag::obstruction::{
    candidate_gammas, find_witness, obstruction_report, shortroot_candidates, validate_witness, GammaStatus, Verdict,
};
use lieflag::weights::{dual_weight, weight_system};
use lieflag::{Family, LieType, RootDatum, RootVector};

fn expected_candidates(t: LieType) -> Vec<usize> {
    let l = t.rank;
    match (t.family, l) {
        (Family::A | Family::C, _) => (1..=l).collect(),
        (Family::B, _) => vec![1, l],
        (Family::D, _) => vec![1, l - 1, l],
        (Family::E, 6) => vec![1, 6],
        (Family::E, 7) => vec![7],
        (Family::E, _) => vec![],
        (Family::F, _) => vec![4],
        (Family::G, _) => vec![1],
    }
}

#[test]
fn candidate_lists() {
    for t in LieType::all_up_to(8) {
        if t.alias_warning().is_some() {
            continue;
        }
        let rd = RootDatum::build(t).unwrap();
        assert_eq!(shortroot_candidates(&rd).candidate_indices, expected_candidates(t), "{t}");
    }
    let f4 = datum(Family::F, 4);
    assert_eq!(shortroot_candidates(&f4).short_coroot_coefficients, vec![2, 3, 2, 1]);
}

#[test]
fn excluded_cases() {
    let mut cases: Vec<(Family, usize, usize)> = Vec::new();
    for l in 1..=8usize {
        for p in 3..=l.div_ceil(2) {
            cases.push((Family::A, l, p));
        }
    }
    cases.extend((3..=8).map(|l| (Family::B, l, l)));
    cases.extend((5..=8).map(|l| (Family::D, l, l)));
    for l in 2..=6 {
        cases.extend((2..=l).map(|p| (Family::C, l, p)));
    }
    // C2 ϖ2 is the B2 vector module, outside the witness test's reach.
    cases.retain(|&c| c != (Family::C, 2, 2));
    cases.extend([(Family::E, 6, 1), (Family::E, 7, 7), (Family::F, 4, 4), (Family::G, 2, 1)]);
    for (f, l, p) in cases {
        let rd = datum(f, l);
        let rep = obstruction_report(&rd, &rd.fundamental(p)).unwrap();
        assert_eq!(rep.verdict, Verdict::Excluded, "{f:?}{l} ϖ{p}");
        assert!(rep.multiplicity_free);
        assert!(rep.revalidate(&rd).unwrap());
    }
}

#[test]
fn inconclusive_cases() {
    for l in 1..=8 {
        let a = datum(Family::A, l);
        for p in [1, l] {
            let rep = obstruction_report(&a, &a.fundamental(p)).unwrap();
            assert_eq!(rep.verdict, Verdict::Inconclusive, "A{l} ϖ{p}");
            assert!(rep.summands.iter().any(|e| e.status == GammaStatus::PositiveRoot && e.witness.is_none()));
        }
    }
    for l in 2..=6 {
        let c = datum(Family::C, l);
        assert_eq!(obstruction_report(&c, &c.fundamental(1)).unwrap().verdict, Verdict::Inconclusive, "C{l}");
    }
}

#[test]
fn c2_second_fundamental_has_no_witness() {
    let c2 = datum(Family::C, 2);
    let rep = obstruction_report(&c2, &c2.fundamental(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Inconclusive);
    let b2 = datum(Family::B, 2);
    assert_eq!(obstruction_report(&b2, &b2.fundamental(1)).unwrap().verdict, Verdict::Inconclusive);
}

#[test]
fn e7_printed_weights_carry_a_sign() {
    let pw = reference_witnesses().into_iter().find(|p| p.name == "E7").unwrap();
    let e = |terms: &[(usize, i64, i64)]| common::vec_of(8, terms);
    assert_eq!(pw.model.labels(&e(&[(1, 1, 1), (0, -1, 1)])), w(7, &[(1, 1)]));
    assert_eq!(pw.model.labels(&e(&[(0, 1, 1), (7, 1, 1)])), w(7, &[(7, -1)]));
    assert_eq!(pw.model.labels(&e(&[(0, 2, 1)])), w(7, &[(2, -1)]));
}

#[test]
fn gamma_lists() {
    let b3 = datum(Family::B, 3);
    let gammas = candidate_gammas(&b3, &b3.fundamental(3)).unwrap();
    assert_eq!(gammas.len(), 3);
    let roots: Vec<Option<RootVector>> = gammas.iter().map(|(_, g, _)| b3.weight_to_root(g)).collect();
    // ε1 + ε2 = α1 + 2α2 + 2α3 and ε1 = α1 + α2 + α3.
    assert!(roots.contains(&Some(RootVector(vec![1, 2, 2]))));
    assert!(roots.contains(&Some(RootVector(vec![1, 1, 1]))));
    assert!(gammas.iter().any(|(_, _, s)| *s == GammaStatus::Zero));

    let g2 = datum(Family::G, 2);
    let gammas: Vec<_> = candidate_gammas(&g2, &g2.fundamental(1)).unwrap().into_iter().map(|(_, g, s)| (g, s)).collect();
    assert!(gammas.contains(&(w(2, &[(2, 1)]), GammaStatus::PositiveRoot)));
    assert!(gammas.contains(&(w(2, &[(1, 1)]), GammaStatus::PositiveRoot)));
    assert!(gammas.contains(&(w(2, &[]), GammaStatus::Zero)));
}

#[test]
fn found_witnesses_validate_literally() {
    for (f, l, p) in [(Family::B, 4, 4), (Family::C, 4, 3), (Family::E, 6, 1), (Family::D, 6, 6)] {
        let rd = datum(f, l);
        let lambda = rd.fundamental(p);
        let ws = weight_system(&rd, &lambda).unwrap();
        let star = dual_weight(&rd, &lambda);
        for (_, gamma, status) in candidate_gammas(&rd, &lambda).unwrap() {
            if status != GammaStatus::PositiveRoot {
                continue;
            }
            let root = rd.weight_to_root(&gamma).unwrap();
            let nu = find_witness(&rd, &lambda, &root).unwrap().expect("witness");
            assert!(ws.contains(&nu) && ws.contains(&(&nu + &gamma)));
            let total = rd.weight_to_root(&(&(&nu + &star) + &gamma));
            assert!(total.map_or(true, |r| !rd.is_positive_root(&r)));
            assert!(validate_witness(&rd, &ws, &star, &gamma, &nu));
            // A weight outside the module never validates.
            let far = &nu + &lambda.scale(5);
            assert!(!validate_witness(&rd, &ws, &star, &gamma, &far));
        }
    }
}

#[test]
fn reference_witnesses_validate() {
    for pw in reference_witnesses() {
        let rd = RootDatum::build(pw.lie_type).unwrap();
        assert_eq!(pw.model.cartan(), rd.cartan().to_vec(), "{} model", pw.name);
        let lambda = rd.fundamental(pw.node);
        let star = dual_weight(&rd, &lambda);
        assert_eq!(pw.model.labels(&pw.lambda_star), star, "{} λ*", pw.name);
        let ws = weight_system(&rd, &lambda).unwrap();
        let gammas = candidate_gammas(&rd, &lambda).unwrap();
        for (gamma, nu) in &pw.pairs {
            let g = pw.model.labels(gamma);
            let n = pw.model.labels(nu);
            assert!(
                gammas.iter().any(|(_, x, s)| *x == g && *s == GammaStatus::PositiveRoot),
                "{}: γ {g:?} is not a positive-root summand",
                pw.name
            );
            assert!(validate_witness(&rd, &ws, &star, &g, &n), "{}: ν {n:?} fails for γ {g:?}", pw.name);
        }
    }
}
