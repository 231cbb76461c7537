#![no_main]
use libfuzzer_sys::fuzz_target;
use rootmonoid::io::{monoid_to_json, parse_monoid_json};

fuzz_target!(|data: &[u8]| {
    if data.len() > 1024 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_monoid_json(s) {
        let again = parse_monoid_json(&monoid_to_json(&m)).expect("round trip");
        assert_eq!(monoid_to_json(&again), monoid_to_json(&m));
    }
});
