#![no_main]
use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use rootmonoid::io::{parse_point_json, point_to_json};
use rootmonoid::monoid::RootMonoid;
use rootmonoid::presets::{quadric_cylinder_monoid, CylinderParams};

fn cylinder() -> &'static RootMonoid {
    static M: OnceLock<RootMonoid> = OnceLock::new();
    M.get_or_init(|| {
        quadric_cylinder_monoid(CylinderParams::from_slice(&[0, 1, 1, 1, 0, 1, 2, 3]).unwrap()).unwrap()
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let v = cylinder().variety();
    if let Ok(x) = parse_point_json(s, v) {
        assert_eq!(parse_point_json(&point_to_json(v, &x), v).unwrap(), x);
    }
});
