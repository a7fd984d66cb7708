#![no_main]

use hardy_spectral::graph::path_graph;
use hardy_spectral::harness::parse_vertex_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(list) = std::str::from_utf8(data) {
        let graph = path_graph(&[1.0; 4], &[1.0; 3]).unwrap();
        if let Ok(set) = parse_vertex_list(&graph, list) {
            assert!(set.iter().all(|v| v < 4));
        }
    }
});
