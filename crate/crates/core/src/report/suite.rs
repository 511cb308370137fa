use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Check, Group, Outcome, Residual, RunConfig};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub group: Group,
    pub claim: String,
    pub status: Status,
    /// Tolerance in force, `None` for exact checks.
    pub tolerance: Option<f64>,
    /// `None` when skipped.
    pub residual: Option<Residual>,
    pub detail: String,
    /// Present only when timing was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub filter: String,
    pub warnings: Vec<String>,
    pub counts: Counts,
    /// Sorted by id.
    pub results: Vec<CheckResult>,
}

/// Output options of one run.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub timing: bool,
}

/// Checks whose id matches `filter`; `all` matches everything. Errors on a malformed glob.
pub fn select(checks: &[Check], filter: &str) -> Result<Vec<Check>, String> {
    let pat = if filter == "all" { "*" } else { filter };
    let p = glob::Pattern::new(pat).map_err(|e| format!("invalid filter `{filter}`: {e}"))?;
    Ok(checks.iter().filter(|c| p.matches(&c.id)).cloned().collect())
}

fn run_one(c: &Check, cfg: &RunConfig, opts: RunOptions) -> CheckResult {
    let tolerance = c.tolerance.map(|t| cfg.tol_or(t));
    let base = |status, residual, detail: String, wall_ms| CheckResult {
        id: c.id.clone(),
        group: c.group,
        claim: c.claim.clone(),
        status,
        tolerance,
        residual,
        detail,
        wall_ms,
    };
    if cfg.max_sites < c.min_sites {
        return base(Status::Skipped, None, format!("needs max-sites ≥ {}", c.min_sites), None);
    }
    let t0 = Instant::now();
    let o = catch_unwind(AssertUnwindSafe(|| (c.run)(cfg))).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Outcome::judged(false, Residual::Terms(usize::MAX), format!("panicked: {}", msg.unwrap_or_default()))
    });
    let wall = opts.timing.then(|| t0.elapsed().as_secs_f64() * 1e3);
    base(if o.passed { Status::Pass } else { Status::Fail }, Some(o.residual), o.detail, wall)
}

/// Runs every check of `checks` matching `filter` on the worker pool; results come back in id order.
pub fn run_suite(checks: &[Check], filter: &str, cfg: &RunConfig, opts: RunOptions) -> SuiteReport {
    let mut warnings = Vec::new();
    let mut selected = select(checks, filter).unwrap_or_else(|e| {
        warnings.push(e);
        Vec::new()
    });
    if selected.is_empty() && warnings.is_empty() {
        warnings.push(format!("filter `{filter}` matches no registered check"));
    }
    selected.sort_by(|a, b| a.id.cmp(&b.id));
    let results: Vec<CheckResult> = selected.par_iter().map(|c| run_one(c, cfg, opts)).collect();
    let count = |s| results.iter().filter(|r| r.status == s).count();
    let counts = Counts { total: results.len(), pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) };
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        tool: "qbax".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: cfg.clone(),
        filter: filter.into(),
        warnings,
        counts,
        results,
    }
}

fn residual_text(r: &Option<Residual>) -> String {
    match r {
        None => "-".into(),
        Some(Residual::Terms(usize::MAX)) => "error".into(),
        Some(Residual::Terms(n)) => format!("{n} terms"),
        Some(Residual::Norm(x)) => format!("{x:.3e}"),
    }
}

impl SuiteReport {
    /// True iff no check failed.
    pub fn ok(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn result(&self, id: &str) -> Option<&CheckResult> {
        self.results.binary_search_by(|r| r.id.as_str().cmp(id)).ok().map(|i| &self.results[i])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per check, then the counts.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let tol = self.config.tol.map_or("default".to_string(), |t| format!("{t:e}"));
        let _ = writeln!(
            s,
            "{} {} (schema {}) seed {} max-sites {} tol {} filter {}",
            self.tool, self.version, self.schema_version, self.config.seed, self.config.max_sites, tol, self.filter
        );
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        let width = self.results.iter().map(|r| r.id.chars().count()).max().unwrap_or(0);
        for r in &self.results {
            let _ = write!(s, "{} {:<10} {:<width$} {:>10}  {}", r.status.label(), r.group.name(), r.id, residual_text(&r.residual), r.detail);
            if let Some(ms) = r.wall_ms {
                let _ = write!(s, "  [{ms:.1} ms]");
            }
            s.push('\n');
        }
        let c = &self.counts;
        let _ = writeln!(s, "{} checks: {} pass, {} fail, {} skipped", c.total, c.pass, c.fail, c.skipped);
        s
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Markdown table of the registry: id, group, claim, tolerance and, when a report is given, status.
pub fn docs_table(checks: &[Check], report: Option<&SuiteReport>) -> String {
    let mut sorted: Vec<&Check> = checks.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let mut s = String::from("| id | group | claim | tolerance | status |\n|---|---|---|---|---|\n");
    for c in sorted {
        let tol = c.tolerance.map_or("exact".to_string(), |t| format!("{t:e}"));
        let status = report.and_then(|r| r.result(&c.id)).map_or("not run", |r| r.status.label());
        let _ = writeln!(s, "| `{}` | {} | {} | {} | {} |", c.id, c.group.name(), cell(&c.claim), tol, status);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Vec<Check> {
        vec![
            Check::exact(Group::Catalog, "b-exact", "zero", |_| Outcome::exact(0, "ok")),
            Check::numeric(Group::Qdilog, "a-num", "small", 1e-3, |c| Outcome::numeric(1e-4, c.tol_or(1e-3), "ok")),
            Check::exact(Group::Lmatrices, "c-sites", "needs sites", |_| Outcome::exact(0, "ok")).needs_sites(5),
            Check::exact(Group::Classical, "d-panic", "panics", |_| panic!("boom")),
        ]
    }

    #[test]
    fn results_are_sorted_and_counted() {
        let r = run_suite(&toy(), "all", &RunConfig::default(), RunOptions::default());
        let ids: Vec<&str> = r.results.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["a-num", "b-exact", "c-sites", "d-panic"]);
        assert_eq!(r.counts, Counts { total: 4, pass: 2, fail: 1, skipped: 1 });
        assert!(!r.ok());
        assert!(r.result("d-panic").unwrap().detail.contains("boom"));
    }

    #[test]
    fn tolerance_override_applies() {
        let cfg = RunConfig { tol: Some(1e-5), ..RunConfig::default() };
        let r = run_suite(&toy(), "a-*", &cfg, RunOptions::default());
        assert_eq!(r.results[0].status, Status::Fail);
        assert_eq!(r.results[0].tolerance, Some(1e-5));
    }

    #[test]
    fn unmatched_filter_warns() {
        let r = run_suite(&toy(), "zzz*", &RunConfig::default(), RunOptions::default());
        assert!(r.results.is_empty() && r.ok());
        assert_eq!(r.warnings.len(), 1);
        let r = run_suite(&toy(), "[", &RunConfig::default(), RunOptions::default());
        assert!(r.results.is_empty() && r.warnings[0].contains("invalid filter"));
    }

    #[test]
    fn json_round_trips_and_omits_timing() {
        let r = run_suite(&toy(), "b-*", &RunConfig::default(), RunOptions::default());
        let j = r.to_json();
        assert!(!j.contains("wall_ms"));
        assert_eq!(SuiteReport::from_json(&j).unwrap(), r);
        let t = run_suite(&toy(), "b-*", &RunConfig::default(), RunOptions { timing: true });
        assert!(t.to_json().contains("wall_ms"));
    }

    #[test]
    fn registry_ids_are_unique_and_claimed() {
        let reg = super::super::registry();
        for w in reg.windows(2) {
            assert!(w[0].id < w[1].id, "duplicate or unsorted id {}", w[1].id);
        }
        assert!(reg.iter().all(|c| !c.claim.is_empty()));
        let docs = docs_table(&reg, None);
        assert_eq!(docs.lines().count(), reg.len() + 2);
    }
}
