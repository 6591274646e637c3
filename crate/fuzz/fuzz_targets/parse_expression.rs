#![no_main]

use cs_d4::parse::parse_zpolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_zpolynomial(s) {
        let again = parse_zpolynomial(&p.to_string()).expect("display output parses");
        assert_eq!(again, p);
    }
});
