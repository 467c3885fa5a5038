#![no_main]

use libfuzzer_sys::fuzz_target;
use num_bigint::BigUint;
use pio_core::classifier::classify_with_cap;
use pio_core::evaluator::{eval_pio, EvalMethod};
use pio_core::recurrence::RecurrenceSpec;

// bytes -> small spec: k from the first byte, then coefficients and initial values in [-8, 7]
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let k = (first % 4) as usize + 1;
    if rest.len() < 2 * k {
        return;
    }
    let small = |b: u8| i64::from(b % 16) - 8;
    let coeffs: Vec<i64> = rest[..k].iter().copied().map(small).collect();
    let initial: Vec<i64> = rest[k..2 * k].iter().copied().map(small).collect();
    let Ok(spec) = RecurrenceSpec::from_i64s(&coeffs, &initial) else { return };
    let Ok(cls) = classify_with_cap(&spec, 10_000) else { return };
    let terms = spec.terms(60);
    for n in 1..=60u64 {
        let got = eval_pio(&cls, &BigUint::from(n), EvalMethod::Auto).unwrap();
        assert_eq!(got, terms[n as usize - 1], "n = {n}");
    }
});
