use serde::Serialize;

use crate::hypergraph::{EdgeUniverse, Hypergraph};

use super::{missing_starts, Check, Finding, VerifyError};

/// Uniformities the standalone check accepts.
pub const CORO_R_RANGE: std::ops::RangeInclusive<usize> = 3..=6;

/// At `n = r + 1` with `1 <= |E| < r`: the vertices where no path of length
/// `|E|` starts, split into violations (`|E| >= 2`) and discrepancies
/// (`|E| = 1`, where the vertex outside the edge can never start one).
/// Empty for instances outside that domain.
pub fn coro_path_instance(h: &Hypergraph) -> (Vec<String>, Vec<String>) {
    let m = h.num_edges();
    if h.n() != h.r() + 1 || m == 0 || m >= h.r() {
        return (Vec::new(), Vec::new());
    }
    let missing = missing_starts(h, m);
    if missing.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let detail = missing
        .iter()
        .map(|v| format!("no Berge path of length {m} starts at v{v}"))
        .collect();
    if m == 1 {
        (Vec::new(), detail)
    } else {
        (detail, Vec::new())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoroPathReport {
    pub r: usize,
    pub instances: u64,
    pub vertex_checks: u64,
    pub violations: Vec<Finding>,
    pub discrepancies: Vec<Finding>,
}

impl CoroPathReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every labeled hypergraph on `r + 1` vertices with `1 <= |E| < r`.
pub fn coro_path_check(r: usize) -> Result<CoroPathReport, VerifyError> {
    if !CORO_R_RANGE.contains(&r) {
        return Err(VerifyError::CoroRange(r));
    }
    let universe = EdgeUniverse::new(r + 1, r)?;
    let mut rep = CoroPathReport {
        r,
        instances: 0,
        vertex_checks: 0,
        violations: Vec::new(),
        discrepancies: Vec::new(),
    };
    for subset in 0u64..1 << universe.len() {
        let m = subset.count_ones() as usize;
        if m == 0 || m >= r {
            continue;
        }
        let h = universe.instance(subset);
        rep.instances += 1;
        rep.vertex_checks += h.n() as u64;
        let (bad, odd) = coro_path_instance(&h);
        let wrap = |d| Finding::new(subset, &h, Check::CoroPath, d);
        rep.violations.extend(bad.into_iter().map(wrap));
        rep.discrepancies.extend(odd.into_iter().map(wrap));
    }
    Ok(rep)
}
