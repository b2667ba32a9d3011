//! Verification sweeps over every (or a seeded sample of) labeled
//! `r`-uniform hypergraph on `n` vertices.
//!
//! Instances are addressed by an index. In exhaustive mode the index is the
//! edge-subset bitmask itself; in sample mode index `i` draws its subset
//! from ChaCha8 keyed by `(seed, i)`: the generator is seeded with
//! `seed_from_u64(seed)`, switched to stream `i`, and the first `u64` it
//! produces, masked to `C(n, r)` bits, selects the edges. Every candidate
//! edge is thus an independent fair coin, which is the uniform distribution
//! over edge subsets, and any instance can be regenerated on its own.
//!
//! Workers take contiguous index blocks. Their results are merged by
//! summing counters and sorting violations by `(index, check)`, so the
//! report does not depend on the worker count.

mod coro;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::goodset::{self, GoodSetContext};
use crate::hypergraph::{EdgeUniverse, Hypergraph, HypergraphError};
use crate::search::{self, for_each_path_of_length, PathQuery};
use crate::weights::{self, Classification};

pub use coro::{coro_path_check, coro_path_instance, CoroPathReport, CORO_R_RANGE};
pub use report::{report_read, report_write, Census, ConfigEcho, Finding, SweepReport};

/// Default cap on recorded violations (and discrepancies).
pub const DEFAULT_VIOLATION_CAP: usize = 100;

/// Largest `C(n, r)` swept exhaustively when the good-set or rotation
/// checks are enabled.
pub const HEAVY_EXHAUSTIVE_LIMIT: usize = 20;
/// Largest `C(n, r)` swept exhaustively otherwise.
pub const LIGHT_EXHAUSTIVE_LIMIT: usize = 30;
/// Sampled subsets are drawn from one `u64`.
pub const SAMPLE_EDGE_LIMIT: usize = 64;

/// Name of the sampling scheme, echoed in reports.
pub const SAMPLER: &str = "chacha8(seed_from_u64(seed), stream = index), first u64 masked to C(n,r) bits";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("{mode} sweep limited to C(n, r) <= {limit} with these checks, got {count}")]
    TooLarge {
        mode: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("sweeps need r >= 3, got r = {0}")]
    UniformityTooSmall(usize),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("no checks selected")]
    NoChecks,
    #[error("path-start check needs r in 3..=6, got {0}")]
    CoroRange(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

/// Properties a sweep can test on each instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `Σ 1/f_r(p(e)) <= n`.
    Inequality,
    /// Exact equality with `n` agrees with the component truth table.
    EqualityClassifier,
    /// Connected instances have a good set; for `k > r` some good set is
    /// proper or `n = k + 1`; for `1 < k <= r` some good set matches a
    /// small-`k` pattern.
    GoodSetExistence,
    /// Every longest path's rotation closure satisfies the neighborhood bound.
    RotationBound,
    /// A `(k+1)`-cycle of a connected instance spans it and forces `p = k`.
    SpanningCycle,
    /// At `n = r + 1` with `1 <= |E| < r`, a path of length `|E|` starts at
    /// every vertex. `|E| = 1` failures are recorded as discrepancies.
    CoroPath,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Inequality,
        Check::EqualityClassifier,
        Check::GoodSetExistence,
        Check::RotationBound,
        Check::SpanningCycle,
        Check::CoroPath,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Inequality => "inequality",
            Check::EqualityClassifier => "equality_classifier",
            Check::GoodSetExistence => "good_set_existence",
            Check::RotationBound => "rotation_bound",
            Check::SpanningCycle => "spanning_cycle",
            Check::CoroPath => "coro_path",
        }
    }

    fn is_heavy(self) -> bool {
        matches!(self, Check::GoodSetExistence | Check::RotationBound)
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>, VerifyError> {
        let mut out = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if token == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(token.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(VerifyError::NoChecks);
        }
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    pub r: usize,
    pub mode: SweepMode,
    pub connected_only: bool,
    /// Sorted, without duplicates.
    pub checks: Vec<Check>,
    pub violation_cap: usize,
}

impl SweepConfig {
    pub fn exhaustive(n: usize, r: usize) -> Self {
        SweepConfig {
            n,
            r,
            mode: SweepMode::Exhaustive,
            connected_only: false,
            checks: Check::ALL.to_vec(),
            violation_cap: DEFAULT_VIOLATION_CAP,
        }
    }

    pub fn sample(n: usize, r: usize, count: u64, seed: u64) -> Self {
        SweepConfig {
            mode: SweepMode::Sample { count, seed },
            ..SweepConfig::exhaustive(n, r)
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks = checks.to_vec();
        self.checks.sort();
        self.checks.dedup();
        self
    }

    pub fn connected(mut self, connected_only: bool) -> Self {
        self.connected_only = connected_only;
        self
    }

    pub fn has(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }

    /// The candidate-edge universe after checking the size guards.
    pub fn validate(&self) -> Result<EdgeUniverse, VerifyError> {
        if self.r < 3 {
            return Err(VerifyError::UniformityTooSmall(self.r));
        }
        if self.checks.is_empty() {
            return Err(VerifyError::NoChecks);
        }
        let universe = EdgeUniverse::new(self.n, self.r)?;
        let (mode, limit) = match self.mode {
            SweepMode::Exhaustive if self.checks.iter().any(|c| c.is_heavy()) => {
                ("exhaustive", HEAVY_EXHAUSTIVE_LIMIT)
            }
            SweepMode::Exhaustive => ("exhaustive", LIGHT_EXHAUSTIVE_LIMIT),
            SweepMode::Sample { .. } => ("sampled", SAMPLE_EDGE_LIMIT),
        };
        if universe.len() > limit {
            return Err(VerifyError::TooLarge {
                mode,
                count: universe.len(),
                limit,
            });
        }
        Ok(universe)
    }

    fn index_count(&self, universe: &EdgeUniverse) -> u64 {
        match self.mode {
            SweepMode::Exhaustive => 1u64 << universe.len(),
            SweepMode::Sample { count, .. } => count,
        }
    }

    fn subset_at(&self, universe: &EdgeUniverse, index: u64) -> u64 {
        match self.mode {
            SweepMode::Exhaustive => index,
            SweepMode::Sample { seed, .. } => sample_subset(seed, index, universe.len()),
        }
    }
}

/// The edge subset drawn for sample `index` under `seed`.
pub fn sample_subset(seed: u64, index: u64, edges: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let word = rng.next_u64();
    if edges >= 64 {
        word
    } else {
        word & ((1u64 << edges) - 1)
    }
}

/// Findings from one instance.
#[derive(Debug, Default)]
struct InstanceOutcome {
    classification: Option<Classification>,
    violations: Vec<(Check, String)>,
    discrepancies: Vec<(Check, String)>,
}

fn check_instance(h: &Hypergraph, cfg: &SweepConfig) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let k = search::longest_length(h);
    let p = search::p_edge_all(h);
    let connected = h.is_connected();

    let rep = weights::weight_report_from_profile(h, k, &p);
    out.classification = Some(rep.classification);
    if cfg.has(Check::Inequality) && !rep.within_bound() {
        out.violations
            .push((Check::Inequality, format!("sum {} exceeds n = {}", rep.sum, h.n())));
    }
    if cfg.has(Check::EqualityClassifier) && !rep.classifier_agrees() {
        out.violations.push((
            Check::EqualityClassifier,
            format!(
                "sum {} vs n = {} but classified {}",
                rep.sum,
                h.n(),
                rep.classification.as_str()
            ),
        ));
    }
    if cfg.has(Check::GoodSetExistence) && connected && h.num_edges() > 0 {
        if let Some(detail) = good_set_violation(h, k, p.clone()) {
            out.violations.push((Check::GoodSetExistence, detail));
        }
    }
    if cfg.has(Check::RotationBound) {
        if let Some(detail) = rotation_violation(h, k) {
            out.violations.push((Check::RotationBound, detail));
        }
    }
    if cfg.has(Check::SpanningCycle) && connected {
        let rep = goodset::check_spanning_cycle_property(h).expect("connected");
        if let Some(detail) = rep.detail {
            out.violations.push((Check::SpanningCycle, detail));
        }
    }
    if cfg.has(Check::CoroPath) {
        let (violations, discrepancies) = coro_path_instance(h);
        out.violations
            .extend(violations.into_iter().map(|d| (Check::CoroPath, d)));
        out.discrepancies
            .extend(discrepancies.into_iter().map(|d| (Check::CoroPath, d)));
    }
    out
}

fn good_set_violation(h: &Hypergraph, k: usize, p: Vec<usize>) -> Option<String> {
    let ctx = GoodSetContext::from_profile(h, k, p).expect("r >= 3 with edges");
    let r = h.r();
    let n = h.n();
    let mut any = false;
    let mut proper = false;
    let mut patterned = false;
    ctx.for_each_good(|s| {
        any = true;
        proper |= s.len() < n;
        if 1 < k && k <= r && !patterned {
            let c = ctx.check(s).expect("valid").expect("good");
            patterned = !goodset::small_k_patterns(r, &c).is_empty();
        }
        // Stop once every question is settled.
        !(proper && (patterned || k <= 1 || k > r))
    });
    if !any {
        return Some(format!("no good set (k = {k})"));
    }
    if k > r && !proper && n != k + 1 {
        return Some(format!("k = {k} > r but the only good set is V and n = {n} != k + 1"));
    }
    if 1 < k && k <= r && !patterned {
        return Some(format!("k = {k}: no good set matches a small-k pattern"));
    }
    None
}

fn rotation_violation(h: &Hypergraph, k: usize) -> Option<String> {
    let mut detail = None;
    for_each_path_of_length(h, k, |path| {
        let fam = goodset::rotation_closure(h, path, path.start()).expect("valid path");
        if !fam.bound_holds() {
            detail = Some(format!(
                "path {}: |N(tau)| = {} > 2|tau| - 1 = {}",
                path.render(),
                fam.bound_lhs,
                fam.bound_rhs
            ));
        } else if !fam.witnesses_sound(h) {
            detail = Some(format!("path {}: unsound rotation witness", path.render()));
        }
        detail.is_none()
    });
    detail
}

#[derive(Debug, Default)]
struct Partial {
    instances: u64,
    census: Census,
    violations: Vec<Finding>,
    violations_total: u64,
    discrepancies: Vec<Finding>,
    discrepancies_total: u64,
}

impl Partial {
    fn merge(mut self, other: Partial, cap: usize) -> Partial {
        self.instances += other.instances;
        self.census.add(&other.census);
        self.violations_total += other.violations_total;
        self.discrepancies_total += other.discrepancies_total;
        self.violations.extend(other.violations);
        self.discrepancies.extend(other.discrepancies);
        for list in [&mut self.violations, &mut self.discrepancies] {
            list.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
            list.truncate(cap);
        }
        self
    }
}

fn sweep_block(cfg: &SweepConfig, universe: &EdgeUniverse, lo: u64, hi: u64) -> Partial {
    let mut part = Partial::default();
    for index in lo..hi {
        let h = universe.instance(cfg.subset_at(universe, index));
        if cfg.connected_only && !h.is_connected() {
            continue;
        }
        part.instances += 1;
        let out = check_instance(&h, cfg);
        if let Some(c) = out.classification {
            part.census.count(c);
        }
        let record = |list: &mut Vec<Finding>, total: &mut u64, found: Vec<(Check, String)>| {
            for (check, detail) in found {
                *total += 1;
                if list.len() < cfg.violation_cap {
                    list.push(Finding::new(index, &h, check, detail));
                }
            }
        };
        record(&mut part.violations, &mut part.violations_total, out.violations);
        record(
            &mut part.discrepancies,
            &mut part.discrepancies_total,
            out.discrepancies,
        );
    }
    part
}

/// Runs `cfg` on `workers` threads (at least one).
pub fn run_sweep(cfg: &SweepConfig, workers: usize) -> Result<SweepReport, VerifyError> {
    let universe = cfg.validate()?;
    let start = Instant::now();
    let total = cfg.index_count(&universe);
    let workers = workers.max(1) as u64;
    let bounds = |w: u64| (total as u128 * w as u128 / workers as u128) as u64;

    let merged = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (lo, hi) = (bounds(w), bounds(w + 1));
                let universe = &universe;
                scope.spawn(move || sweep_block(cfg, universe, lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .fold(Partial::default(), |acc, p| acc.merge(p, cfg.violation_cap))
    });

    Ok(SweepReport {
        config: ConfigEcho::from_config(cfg, universe.len()),
        instances: merged.instances,
        violations: merged.violations,
        census: merged.census,
        elapsed_ms: start.elapsed().as_millis() as u64,
        violations_total: merged.violations_total,
        discrepancies: merged.discrepancies,
        discrepancies_total: merged.discrepancies_total,
    })
}

/// Vertices at which no Berge path of length `len` starts.
pub(crate) fn missing_starts(h: &Hypergraph, len: usize) -> Vec<usize> {
    (0..h.n())
        .filter(|&v| {
            search::search_length(h, &PathQuery::starting_at(v).with_length(len)).is_none()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.as_str().parse::<Check>().unwrap(), c);
        }
        assert_eq!(
            Check::parse_list("rotation_bound, inequality,inequality").unwrap(),
            vec![Check::Inequality, Check::RotationBound]
        );
        assert_eq!(Check::parse_list("all").unwrap(), Check::ALL.to_vec());
        assert!(matches!(Check::parse_list("bogus"), Err(VerifyError::UnknownCheck(_))));
        assert!(matches!(Check::parse_list(""), Err(VerifyError::NoChecks)));
    }

    #[test]
    fn guards() {
        assert!(SweepConfig::exhaustive(6, 3).validate().is_ok());
        assert!(matches!(
            SweepConfig::exhaustive(7, 3).validate(),
            Err(VerifyError::TooLarge { count: 35, limit: 20, .. })
        ));
        assert!(matches!(
            SweepConfig::exhaustive(7, 3).with_checks(&[Check::Inequality]).validate(),
            Err(VerifyError::TooLarge { count: 35, limit: 30, .. })
        ));
        assert!(SweepConfig::exhaustive(7, 2).validate().is_err());
        assert!(SweepConfig::sample(7, 3, 10, 1).validate().is_ok());
        assert!(matches!(
            SweepConfig::sample(8, 4, 10, 1).validate(),
            Err(VerifyError::TooLarge { count: 70, limit: 64, .. })
        ));
    }

    #[test]
    fn sampler_is_stateless() {
        let a = sample_subset(42, 1000, 20);
        assert_eq!(a, sample_subset(42, 1000, 20));
        assert!(a < 1 << 20);
        assert_ne!(sample_subset(42, 0, 64), sample_subset(42, 1, 64));
        assert_ne!(sample_subset(42, 0, 64), sample_subset(43, 0, 64));
    }

    #[test]
    fn small_sweep_is_clean() {
        let rep = run_sweep(&SweepConfig::exhaustive(4, 3), 2).unwrap();
        assert_eq!(rep.instances, 16);
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert_eq!(
            (rep.census.case_i, rep.census.case_ii, rep.census.not_extremal),
            (7, 0, 9)
        );
    }

    #[test]
    fn connected_filter() {
        let rep = run_sweep(&SweepConfig::exhaustive(4, 3).connected(true), 1).unwrap();
        assert_eq!(rep.instances, 11);
    }
}
