#![no_main]

use libfuzzer_sys::fuzz_target;
use pio_core::algebra::rat_to_string;
use pio_core::document::{parse_index, parse_int, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_int("x", text) {
        assert_eq!(parse_int("x", &v.to_string()).unwrap(), v);
    }
    if let Ok(n) = parse_index("n", text) {
        assert!(n >= num_bigint::BigUint::from(1u32));
    }
    if let Ok(r) = parse_rational("r", text) {
        let s = rat_to_string(&r);
        assert_eq!(parse_rational("r", &s).unwrap(), r);
    }
});
