use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Outcome;

/// Settings shared by every check in one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Overrides every numeric tolerance when set.
    pub tol: Option<f64>,
    pub max_sites: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 20240607, tol: None, max_sites: crate::lmatrices::DEFAULT_MAX_SITES }
    }
}

impl RunConfig {
    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Catalog,
    Lmatrices,
    Qdilog,
    Cyclicrep,
    Classical,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Catalog => "catalog",
            Group::Lmatrices => "lmatrices",
            Group::Qdilog => "qdilog",
            Group::Cyclicrep => "cyclicrep",
            Group::Classical => "classical",
        }
    }
}

pub type CheckFn = Arc<dyn Fn(&RunConfig) -> Outcome + Send + Sync>;

/// A registered check: stable id, the claim it certifies, and its body.
#[derive(Clone)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub group: Group,
    /// Default numeric tolerance, `None` for exact checks.
    pub tolerance: Option<f64>,
    /// Smallest `max_sites` the body needs; below it the check is skipped.
    pub min_sites: usize,
    pub run: CheckFn,
}

impl Check {
    pub fn exact(group: Group, id: &str, claim: &str, f: impl Fn(&RunConfig) -> Outcome + Send + Sync + 'static) -> Self {
        Check { id: id.into(), claim: claim.into(), group, tolerance: None, min_sites: 1, run: Arc::new(f) }
    }

    pub fn numeric(
        group: Group,
        id: &str,
        claim: &str,
        tol: f64,
        f: impl Fn(&RunConfig) -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Check { id: id.into(), claim: claim.into(), group, tolerance: Some(tol), min_sites: 1, run: Arc::new(f) }
    }

    pub fn needs_sites(mut self, n: usize) -> Self {
        self.min_sites = n;
        self
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Check({})", self.id)
    }
}

/// Every registered check across all modules, sorted by id.
pub fn registry() -> Vec<Check> {
    let mut out = crate::catalog::checks();
    out.extend(crate::lmatrices::checks());
    out.extend(crate::qdilog::checks());
    out.extend(crate::cyclicrep::checks());
    out.extend(crate::classical::checks());
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}
