#![no_main]

use cs_d4::parse::{parse_kappa_rational, parse_kpoly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_kpoly(s) {
        assert_eq!(parse_kpoly(&p.to_string()).expect("display output parses"), p);
    }
    if let Ok(r) = parse_kappa_rational(s) {
        assert_eq!(parse_kappa_rational(&r.to_string()).expect("display output parses"), r);
    }
});
