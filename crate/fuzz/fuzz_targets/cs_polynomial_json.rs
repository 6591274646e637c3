#![no_main]

use cs_d4::fixture::{cs_polynomial_from_json_str, cs_polynomial_to_json, render};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = cs_polynomial_from_json_str(s) {
        let text = render(&cs_polynomial_to_json(&p));
        assert_eq!(cs_polynomial_from_json_str(&text).unwrap(), p);
    }
});
