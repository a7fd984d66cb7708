#![no_main]

use hardy_spectral::harness::parse_suites;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_suites(text);
    }
});
