//! Replays the checked-in fuzz corpus through the same assertions the
//! fuzz targets make, so the seeds stay meaningful without a nightly chain.

use std::fs;
use std::path::PathBuf;

use berge::hypergraph::parse_hypergraph;
use berge::search::parse_path_literal;
use berge::verify::SweepReport;
use berge::Rational;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let p = entry.unwrap().path();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn hypergraph_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_hypergraph") {
        if let Ok(h) = parse_hypergraph(&text) {
            assert_eq!(parse_hypergraph(&h.to_hg_string()).unwrap(), h, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn path_literal_seeds() {
    for (name, text) in seeds("path_literal") {
        if let Ok(p) = parse_path_literal(&text) {
            assert_eq!(p.vertices().len(), p.len() + 1, "{name}");
        }
    }
}

#[test]
fn rational_seeds_round_trip() {
    for (name, text) in seeds("rational") {
        if let Ok(q) = text.parse::<Rational>() {
            assert_eq!(q.to_string().parse::<Rational>().unwrap(), q, "{name}");
        }
    }
}

#[test]
fn report_seeds_round_trip() {
    for (name, text) in seeds("report_json") {
        let rep = SweepReport::from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(rep.to_json(), text, "{name}");
    }
}
