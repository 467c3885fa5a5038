#![no_main]

use libfuzzer_sys::fuzz_target;
use pio_core::document::{parse_spec, SpecDocument};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spec(text) {
        // accepted specs re-encode to an equal spec
        let doc = SpecDocument::from_spec(&spec);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_spec(&json).unwrap(), spec);
    }
});
