use proptest::prelude::*;

use lchi::exact::{rat, QPoly, Rational};
use lchi::numeric::{continuation_eval, direct_sum, ComplexVal, ContinuationPlan, DirectSumOptions};
use lchi::special::{a_offset_consistency, family_pm, scaling_identity_check, telescoping_sides};
use lchi::{check_shift_identity, psi_table, PeriodicFunction};

fn builtin() -> impl Strategy<Value = PeriodicFunction> {
    prop_oneof![Just(PeriodicFunction::chi3()), Just(PeriodicFunction::chi4()), Just(PeriodicFunction::one()),]
}

fn rational_poly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-30i64..=30, 1i64..=7), 1..=max_degree + 1)
        .prop_map(|cs| QPoly::from_rationals(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn monic_int_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=3).prop_map(|mut cs| {
        cs.push(1);
        QPoly::from_ints(&cs)
    })
}

// monic with nonnegative coefficients and constant term >= 1: P(n) > 0 for n >= 1
fn positive_poly() -> impl Strategy<Value = QPoly> {
    (1i64..=6, prop::collection::vec(0i64..=6, 0..=2)).prop_map(|(c0, mut rest)| {
        rest.insert(0, c0);
        rest.push(1);
        QPoly::from_ints(&rest)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_identity_for_builtin_characters(chi in builtin(), e in rational_poly(11)) {
        let table = psi_table(&chi, 12);
        prop_assert!(check_shift_identity(&table, &e).unwrap());
    }

    #[test]
    fn telescoped_sum(chi in builtin(), p in monic_int_poly(), m in 1u32..=5, ell in 1u64..=3) {
        let table = psi_table(&chi, 15);
        let (lhs, rhs) = telescoping_sides(&table, &p, m, ell).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn offsets_are_consistent(chi in builtin(), p in positive_poly(), m in 1u32..=5, a1 in 1u64..=6, extra in 0u64..=8) {
        let table = psi_table(&chi, 15);
        prop_assert!(a_offset_consistency(&chi, &p, &table, m, a1, a1 + extra).unwrap());
    }

    #[test]
    fn scaling_is_a_power(chi in builtin(), p in positive_poly(), m in 1u32..=5, n in 1i64..=12, d in 1i64..=12) {
        let table = psi_table(&chi, 15);
        let c: Rational = rat(n, d);
        prop_assert!(scaling_identity_check(&chi, &p, &c, m, &table).unwrap());
    }
}

#[test]
fn chi3_family_is_odd_in_u() {
    let table = psi_table(&PeriodicFunction::chi3(), 40);
    for m in 1..=20 {
        let p = family_pm(&table, m).unwrap().value;
        for (k, c) in p.coeffs().iter().enumerate() {
            assert!(k % 2 == 1 || num_traits::Zero::is_zero(c), "p_{m} has u^{k}");
        }
    }
}

#[test]
fn agreement_band_with_direct_summation() {
    let polys: [&[i64]; 5] = [&[0, 1, 1], &[1, 0, 1], &[5, 2, 0, 1], &[3, 1], &[7, 3, 2]];
    let mut k = 0;
    for re in [1.6, 2.2, 2.8] {
        for im in [-2.0, 0.0, 1.5] {
            for coeffs in polys {
                k += 1;
                let chi = if k % 2 == 0 { PeriodicFunction::chi3() } else { PeriodicFunction::chi4() };
                let s = ComplexVal::new(re, im);
                let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(coeffs)).unwrap();
                let value = continuation_eval(&plan, s).unwrap();
                let real: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();
                let opts = DirectSumOptions { epsilon: 1e-10, ..Default::default() };
                let oracle = direct_sum(&chi, &real, 1, s, opts).unwrap();
                let err = (value.re - oracle.re).hypot(value.im - oracle.im);
                assert!(err < 1e-8, "P = {coeffs:?}, s = {s}: {value} vs {oracle}");
            }
        }
    }
}
