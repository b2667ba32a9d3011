#![no_main]

use berge::verify::SweepReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rep) = SweepReport::from_json(s) {
        let _ = rep.passed();
        SweepReport::from_json(&rep.to_json()).expect("serialized report parses");
    }
});
