#![no_main]
use libfuzzer_sys::fuzz_target;
use rootmonoid::io::parse_cone_json;

fuzz_target!(|data: &[u8]| {
    // large inputs only slow down the cone computations
    if data.len() > 512 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(c) = parse_cone_json(s) {
            let _ = c.faces();
        }
    }
});
