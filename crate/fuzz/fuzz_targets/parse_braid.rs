#![no_main]
use libfuzzer_sys::fuzz_target;
use tildebraid::words::parse_braid;
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_braid(s, 9);
    }
});
