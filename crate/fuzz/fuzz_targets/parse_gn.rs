#![no_main]
use libfuzzer_sys::fuzz_target;
use tildebraid::extension::parse_gn;
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_gn(s, 9);
    }
});
