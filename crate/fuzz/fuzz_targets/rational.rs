#![no_main]

use berge::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(q) = s.parse::<Rational>() {
        let shown = q.to_string();
        assert_eq!(shown.parse::<Rational>().unwrap(), q);
    }
});
