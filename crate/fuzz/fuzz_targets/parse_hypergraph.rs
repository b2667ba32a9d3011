#![no_main]

use berge::hypergraph::parse_hypergraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(h) = parse_hypergraph(s) {
            // Canonical text must parse back to the same hypergraph.
            let again = parse_hypergraph(&h.to_hg_string()).expect("canonical form parses");
            assert_eq!(again, h);
        }
    }
});
