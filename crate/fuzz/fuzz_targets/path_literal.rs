#![no_main]

use berge::search::parse_path_literal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(p) = parse_path_literal(s) {
        assert_eq!(p.vertices().len(), p.len() + 1);
    }
});
