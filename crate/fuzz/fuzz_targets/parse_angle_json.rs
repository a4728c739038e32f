#![no_main]
use angulated::check_hom_exactness;
use angulated_cli::doc::{parse_angle_json, AngleDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(angle) = parse_angle_json(s) {
        let text = AngleDoc::new(&angle).to_json();
        assert_eq!(parse_angle_json(&text).as_ref().ok(), Some(&angle));
        // Arbitrary documents need not be angles; the check must still terminate.
        let _ = check_hom_exactness(&angle);
    }
});
