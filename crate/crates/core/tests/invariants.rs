use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use pio_core::classifier::{classify, ClassKind};
use pio_core::document::{parse_spec, AnalysisDocument, SpecDocument};
use pio_core::evaluator::{eval_pio, EvalMethod};
use pio_core::powersum::{power_sum, verify_powersum};
use pio_core::recurrence::RecurrenceSpec;

fn small_spec() -> impl Strategy<Value = RecurrenceSpec> {
    (1usize..=4)
        .prop_flat_map(|k| {
            (
                (prop_oneof![-5i64..=-1, 1i64..=5]),
                proptest::collection::vec(-5i64..=5, k - 1),
                proptest::collection::vec(-5i64..=5, k),
            )
        })
        .prop_map(|(a0, rest, initial)| {
            let mut coeffs = vec![a0];
            coeffs.extend(rest);
            RecurrenceSpec::from_i64s(&coeffs, &initial).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn auto_matches_forward_iteration(spec in small_spec()) {
        let cls = classify(&spec).unwrap();
        let terms = spec.terms(120);
        for n in 1..=120u64 {
            prop_assert_eq!(&eval_pio(&cls, &BigUint::from(n), EvalMethod::Auto).unwrap(), &terms[n as usize - 1]);
        }
    }

    #[test]
    fn matrix_matches_forward_iteration(spec in small_spec(), n in 1u64..400) {
        prop_assert_eq!(spec.eval_matrix(n).unwrap(), spec.eval_simple(n).unwrap());
    }

    #[test]
    fn sections_interleave_to_the_sequence(spec in small_spec(), m in 1u64..6) {
        let terms = spec.terms(60);
        for j in 1..=m {
            let section = spec.section(m, j).unwrap();
            for (t, v) in section.terms(60 / m as usize).iter().enumerate() {
                prop_assert_eq!(v, &terms[(j + t as u64 * m) as usize - 1]);
            }
        }
    }

    #[test]
    fn polynomial_classes_have_low_degree(spec in small_spec()) {
        let cls = classify(&spec).unwrap();
        for c in cls.classes.iter().filter(|c| c.kind == ClassKind::Polynomial) {
            let d = c.poly.as_ref().unwrap().degree();
            prop_assert!(d.map_or(true, |d| d < cls.minimal.order()));
        }
    }

    #[test]
    fn documents_round_trip(spec in small_spec()) {
        let json = serde_json::to_string(&SpecDocument::from_spec(&spec)).unwrap();
        prop_assert_eq!(&parse_spec(&json).unwrap(), &spec);
        let doc = AnalysisDocument::from_classification(&classify(&spec).unwrap());
        let text = doc.to_json();
        prop_assert_eq!(AnalysisDocument::from_json(&text).unwrap().to_json(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_sum_encloses_terms(spec in small_spec()) {
        let s = power_sum(&spec, 96).unwrap();
        let report = verify_powersum(&s, 3 * spec.order() as u64).unwrap();
        prop_assert_eq!(report.checked, 3 * spec.order() as u64);
    }
}

#[test]
fn large_index_on_polynomial_class() {
    let cls = classify(&RecurrenceSpec::from_i64s(&[-9, 45, -89, 85, -35, -1, 5], &[-1, 30, 75, 410, 615, 2742, 2387]).unwrap())
        .unwrap();
    let n: BigUint = "100000000000000000000000000000000000001".parse().unwrap();
    let ni = BigInt::from(n.clone());
    let want = ni.pow(4) - BigInt::from(2) * &ni;
    assert_eq!(eval_pio(&cls, &n, EvalMethod::Auto).unwrap(), want);
}
