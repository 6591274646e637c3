#![no_main]

use cs_d4::fixture::{render, zpolynomial_from_json_str, zpolynomial_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = zpolynomial_from_json_str(s) {
        let text = render(&zpolynomial_to_json(&p));
        assert_eq!(zpolynomial_from_json_str(&text).unwrap(), p);
    }
});
