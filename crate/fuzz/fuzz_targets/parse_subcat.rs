#![no_main]
use angulated::wide::{is_wide, is_wide_oracle};
use angulated::FamilyParams;
use angulated_cli::syntax::{format_subcat, parse_subcat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let p = FamilyParams::new(4, 4, 9).unwrap();
    if let Ok(spec) = parse_subcat(&p, s) {
        assert_eq!(parse_subcat(&p, &format_subcat(&spec)).as_ref(), Ok(&spec));
        assert_eq!(is_wide(&p, &spec), is_wide_oracle(&p, &spec));
    }
});
