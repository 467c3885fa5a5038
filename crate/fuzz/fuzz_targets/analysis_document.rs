#![no_main]

use libfuzzer_sys::fuzz_target;
use pio_core::document::AnalysisDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = AnalysisDocument::from_json(text) {
        let out = doc.to_json();
        let again = AnalysisDocument::from_json(&out).expect("serialized document parses");
        assert_eq!(again, doc);
        assert_eq!(again.to_json(), out);
    }
});
