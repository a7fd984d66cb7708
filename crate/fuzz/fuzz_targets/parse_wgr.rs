#![no_main]

use hardy_spectral::harness::{parse_wgr, write_wgr};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // Anything that parses must survive a write/parse round trip unchanged.
        if let Ok(file) = parse_wgr(text) {
            let written = write_wgr(&file.graph, file.boundary.as_ref());
            let again = parse_wgr(&written).expect("written file parses");
            assert_eq!(again.graph.masses(), file.graph.masses());
            assert_eq!(again.graph.edges(), file.graph.edges());
            assert_eq!(again.boundary, file.boundary);
        }
    }
});
