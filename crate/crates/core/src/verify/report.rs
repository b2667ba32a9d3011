use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;
use crate::weights::Classification;

use super::{Check, SweepConfig, SweepMode, VerifyError, SAMPLER};

/// One failed (or discrepant) check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Instance index: the subset bitmask when exhaustive, the sample number
    /// otherwise.
    pub index: u64,
    /// The instance in `.hg` text form.
    pub hg: String,
    pub check: Check,
    pub detail: String,
}

impl Finding {
    pub fn new(index: u64, h: &Hypergraph, check: Check, detail: String) -> Self {
        Finding {
            index,
            hg: h.to_hg_string(),
            check,
            detail,
        }
    }

    pub(crate) fn order_key(&self) -> (u64, Check, &str) {
        (self.index, self.check, &self.detail)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub case_i: u64,
    pub case_ii: u64,
    pub not_extremal: u64,
}

impl Census {
    pub fn count(&mut self, c: Classification) {
        match c {
            Classification::CaseI => self.case_i += 1,
            Classification::CaseIi => self.case_ii += 1,
            // Sweeps reject r = 2, so nothing is out of scope here.
            Classification::NotExtremal | Classification::OutOfScopeR2 => self.not_extremal += 1,
        }
    }

    pub fn add(&mut self, other: &Census) {
        self.case_i += other.case_i;
        self.case_ii += other.case_ii;
        self.not_extremal += other.not_extremal;
    }

    pub fn total(&self) -> u64 {
        self.case_i + self.case_ii + self.not_extremal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub r: usize,
    #[serde(flatten)]
    pub mode: SweepMode,
    pub connected_only: bool,
    pub checks: Vec<Check>,
    pub candidate_edges: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampler: Option<String>,
    pub violation_cap: usize,
}

impl ConfigEcho {
    pub(crate) fn from_config(cfg: &SweepConfig, candidate_edges: usize) -> Self {
        ConfigEcho {
            n: cfg.n,
            r: cfg.r,
            mode: cfg.mode,
            connected_only: cfg.connected_only,
            checks: cfg.checks.clone(),
            candidate_edges,
            sampler: matches!(cfg.mode, SweepMode::Sample { .. }).then(|| SAMPLER.to_string()),
            violation_cap: cfg.violation_cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: ConfigEcho,
    pub instances: u64,
    /// The first `violation_cap` violations by `(index, check)`.
    pub violations: Vec<Finding>,
    pub census: Census,
    pub elapsed_ms: u64,
    pub violations_total: u64,
    /// Known mismatches between a stated claim and the computed truth that
    /// are reported rather than counted as failures.
    pub discrepancies: Vec<Finding>,
    pub discrepancies_total: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }

    /// The report with `elapsed_ms` zeroed, for byte-level comparisons.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, VerifyError> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn report_write(rep: &SweepReport, path: &Path) -> Result<(), VerifyError> {
    fs::write(path, rep.to_json())?;
    Ok(())
}

pub fn report_read(path: &Path) -> Result<SweepReport, VerifyError> {
    SweepReport::from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_sweep;

    #[test]
    fn roundtrip_and_schema() {
        let rep = run_sweep(&SweepConfig::exhaustive(4, 3), 1).unwrap().without_timing();
        let json = rep.to_json();
        assert_eq!(SweepReport::from_json(&json).unwrap(), rep);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["config", "instances", "violations", "census", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["config"]["mode"], "exhaustive");
        assert_eq!(v["census"]["case_i"], 7);
    }

    #[test]
    fn sample_config_echo() {
        let rep = run_sweep(&SweepConfig::sample(5, 3, 10, 9), 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["config"]["mode"], "sample");
        assert_eq!(v["config"]["seed"], 9);
        assert_eq!(v["config"]["count"], 10);
        assert!(v["config"]["sampler"].as_str().unwrap().starts_with("chacha8"));
    }

    #[test]
    fn file_roundtrip() {
        let dir = std::env::temp_dir().join(format!("berge-report-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        let rep = run_sweep(&SweepConfig::exhaustive(3, 3), 1).unwrap();
        report_write(&rep, &path).unwrap();
        assert_eq!(report_read(&path).unwrap(), rep);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn finding_roundtrip() {
        let h = Hypergraph::new(4, 3, [[0, 1, 2].into_iter().collect()]).unwrap();
        let f = Finding::new(1, &h, Check::CoroPath, "x".into());
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains(r#""check":"coro_path""#));
        assert_eq!(serde_json::from_str::<Finding>(&json).unwrap(), f);
    }
}
