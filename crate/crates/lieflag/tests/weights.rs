mod common;

use common::datum;
use lieflag::weights::{dual_weight, lowest_weight, weight_system, weight_system_capped, weyl_dimension, weyl_dimension_u64};
use lieflag::{Error, Family, LieType, RootDatum, WeightVector};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Weights of `S^k(k^n)` for `sl_n`: compositions of `k` into `n` parts, each once.
fn symmetric_power_oracle(n: usize, k: i64) -> BTreeMap<WeightVector, u64> {
    fn rec(n: usize, k: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n - 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=k {
            prefix.push(a);
            rec(n, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut comps = Vec::new();
    rec(n, k, &mut Vec::new(), &mut comps);
    let mut out = BTreeMap::new();
    for c in comps {
        let labels = WeightVector((0..n - 1).map(|i| c[i] - c[i + 1]).collect());
        *out.entry(labels).or_insert(0) += 1;
    }
    out
}

#[test]
fn reference_dimensions() {
    let e6 = datum(Family::E, 6);
    assert_eq!(weyl_dimension_u64(&e6, &e6.fundamental(1)).unwrap(), 27);
    let e7 = datum(Family::E, 7);
    assert_eq!(weyl_dimension_u64(&e7, &e7.fundamental(7)).unwrap(), 56);
    let f4 = datum(Family::F, 4);
    assert_eq!(weyl_dimension_u64(&f4, &f4.fundamental(4)).unwrap(), 26);
    let g2 = datum(Family::G, 2);
    assert_eq!(weyl_dimension_u64(&g2, &g2.fundamental(1)).unwrap(), 7);
    for l in 2..=8 {
        let b = datum(Family::B, l);
        assert_eq!(weyl_dimension_u64(&b, &b.fundamental(l)).unwrap(), 1 << l);
        if l >= 3 {
            let d = datum(Family::D, l);
            assert_eq!(weyl_dimension_u64(&d, &d.fundamental(l)).unwrap(), 1 << (l - 1));
        }
    }
}

#[test]
fn exterior_powers_of_sl() {
    for l in 1..=7 {
        let rd = datum(Family::A, l);
        for p in 1..=l {
            assert_eq!(weyl_dimension_u64(&rd, &rd.fundamental(p)).unwrap(), binom(l as u64 + 1, p as u64));
            let ws = weight_system(&rd, &rd.fundamental(p)).unwrap();
            assert!(ws.table.values().all(|&m| m == 1));
            assert_eq!(ws.dimension(), binom(l as u64 + 1, p as u64));
        }
    }
}

#[test]
fn symmetric_powers_match_compositions() {
    for (n, k) in [(2usize, 5i64), (3, 4), (4, 3), (5, 2)] {
        let rd = datum(Family::A, n - 1);
        let lambda = rd.fundamental(1).scale(k);
        let ws = weight_system(&rd, &lambda).unwrap();
        assert_eq!(ws.table, symmetric_power_oracle(n, k), "S^{k} of k^{n}");
    }
}

#[test]
fn adjoint_modules() {
    for t in LieType::all_up_to(6) {
        let rd = RootDatum::build(t).unwrap();
        let ws = weight_system(&rd, &rd.adjoint_weight()).unwrap();
        assert_eq!(ws.dimension() as usize, t.rank + 2 * rd.num_positive_roots(), "{t}");
        assert_eq!(ws.multiplicity(&WeightVector::zero(t.rank)), t.rank as u64);
        for r in rd.positive_roots() {
            assert_eq!(ws.multiplicity(&rd.root_to_weight(r)), 1);
            assert_eq!(ws.multiplicity(&-&rd.root_to_weight(r)), 1);
        }
    }
}

#[test]
fn f4_short_module() {
    let rd = datum(Family::F, 4);
    let ws = weight_system(&rd, &rd.fundamental(4)).unwrap();
    assert_eq!(ws.dimension(), 26);
    assert_eq!(ws.multiplicity(&WeightVector::zero(4)), 2);
    let long = rd.inner_roots(rd.highest_root(), rd.highest_root());
    let short: Vec<WeightVector> = rd
        .positive_roots()
        .iter()
        .filter(|r| rd.inner_roots(r, r) < long)
        .flat_map(|r| {
            let w = rd.root_to_weight(r);
            [-&w, w]
        })
        .collect();
    assert_eq!(short.len(), 24);
    let support: Vec<&WeightVector> = ws.support().filter(|w| !w.is_zero()).collect();
    assert_eq!(support.len(), 24);
    assert!(short.iter().all(|w| ws.multiplicity(w) == 1));
}

#[test]
fn duals_and_lowest_weights() {
    let b4 = datum(Family::B, 4);
    assert_eq!(dual_weight(&b4, &b4.fundamental(4)), b4.fundamental(4));
    for l in 1..=7 {
        let a = datum(Family::A, l);
        for p in 1..=l {
            assert_eq!(dual_weight(&a, &a.fundamental(p)), a.fundamental(l + 1 - p));
        }
    }
    let d5 = datum(Family::D, 5);
    assert_eq!(dual_weight(&d5, &d5.fundamental(5)), d5.fundamental(4));
    assert_eq!(lowest_weight(&d5, &d5.fundamental(5)), -&d5.fundamental(4));
    let d6 = datum(Family::D, 6);
    assert_eq!(dual_weight(&d6, &d6.fundamental(6)), d6.fundamental(6));
    let e6 = datum(Family::E, 6);
    assert_eq!(lowest_weight(&e6, &e6.fundamental(1)), -&e6.fundamental(6));
    let a1 = datum(Family::A, 1);
    assert_eq!(lowest_weight(&a1, &a1.fundamental(1)), WeightVector(vec![-1]));
}

#[test]
fn caps_and_bad_input() {
    let e8 = datum(Family::E, 8);
    assert!(matches!(weight_system(&e8, &e8.rho()), Err(Error::ResourceCap { .. })));
    assert!(matches!(weight_system_capped(&e8, &e8.fundamental(8), 100), Err(Error::ResourceCap { .. })));
    assert!(weight_system(&e8, &WeightVector(vec![-1, 0, 0, 0, 0, 0, 0, 0])).is_err());
    assert!(weight_system(&e8, &WeightVector(vec![1, 0])).is_err());
    // Weyl's formula itself has no cap.
    assert!(weyl_dimension(&e8, &e8.rho()).unwrap() > BigUint::from(10u64).pow(20));
}

fn small_module() -> impl Strategy<Value = (LieType, WeightVector)> {
    prop::sample::select(LieType::all_up_to(4)).prop_flat_map(|t| {
        (Just(t), prop::collection::vec(0i64..=2, t.rank).prop_map(WeightVector))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplicities_are_weyl_invariant((t, lambda) in small_module()) {
        let rd = RootDatum::build(t).unwrap();
        prop_assume!(weyl_dimension_u64(&rd, &lambda).unwrap() <= 5_000);
        let ws = weight_system(&rd, &lambda).unwrap();
        prop_assert_eq!(ws.dimension(), weyl_dimension_u64(&rd, &lambda).unwrap());
        for (w, &m) in &ws.table {
            for i in 1..=t.rank {
                prop_assert_eq!(ws.multiplicity(&rd.simple_reflection(i, w)), m);
            }
            let diff = rd.weight_to_root(&(&lambda - w));
            prop_assert!(diff.is_some_and(|d| d.is_nonnegative()));
        }
    }

    #[test]
    fn dual_is_an_involution((t, lambda) in small_module()) {
        let rd = RootDatum::build(t).unwrap();
        let star = dual_weight(&rd, &lambda);
        prop_assert_eq!(dual_weight(&rd, &star), lambda.clone());
        prop_assert_eq!(weyl_dimension(&rd, &star).unwrap(), weyl_dimension(&rd, &lambda).unwrap());
        prop_assert_eq!(lowest_weight(&rd, &lambda), -&star);
    }
}
