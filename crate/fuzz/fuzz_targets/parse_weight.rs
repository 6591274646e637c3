#![no_main]

use cs_d4::parse::parse_weight;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_weight(s) {
        let [a, b, c, d] = w.0;
        assert_eq!(parse_weight(&format!("{a},{b},{c},{d}")).unwrap(), w);
    }
});
