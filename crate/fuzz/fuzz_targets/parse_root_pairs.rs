#![no_main]
use libfuzzer_sys::fuzz_target;
use rootmonoid::io::parse_root_pairs_json;
use rootmonoid::lattice_core::Cone;
use rootmonoid::demazure::is_compatible_set;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(set) = parse_root_pairs_json(s) else { return };
    let orthant = Cone::orthant(3);
    if let Ok(tau) = orthant.face(&set.tau_rays) {
        let _ = is_compatible_set(&orthant, &tau, &set);
    }
});
