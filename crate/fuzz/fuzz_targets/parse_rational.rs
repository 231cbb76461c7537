#![no_main]
use libfuzzer_sys::fuzz_target;
use rootmonoid::arith::{format_rat, parse_rat};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rat(s) {
        assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }
});
