#![no_main]
use angulated::FamilyParams;
use angulated_cli::syntax::{format_object, parse_object};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let p = FamilyParams::new(4, 4, 9).unwrap();
    if let Ok(x) = parse_object(&p, s) {
        assert_eq!(parse_object(&p, &format_object(&p, x)), Ok(x));
    }
});
