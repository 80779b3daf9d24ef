#![no_main]
use libfuzzer_sys::fuzz_target;
use tildebraid::btilde::parse_pure_factors;
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_pure_factors(s, 9);
    }
});
