use serde::{Deserialize, Serialize};

/// Size of what a check left over.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Residual {
    /// Surviving terms after normal form.
    Terms(usize),
    /// Largest numerical defect.
    Norm(f64),
}

/// Result of running one check body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub passed: bool,
    pub residual: Residual,
    pub detail: String,
}

impl Outcome {
    /// Symbolic outcome: passes iff no term survives.
    pub fn exact(terms: usize, detail: impl Into<String>) -> Self {
        Outcome { passed: terms == 0, residual: Residual::Terms(terms), detail: detail.into() }
    }

    /// Numeric outcome: passes iff `norm < tol`. NaN never passes.
    pub fn numeric(norm: f64, tol: f64, detail: impl Into<String>) -> Self {
        Outcome { passed: norm < tol, residual: Residual::Norm(norm), detail: detail.into() }
    }

    /// Outcome decided by a predicate other than the residual size.
    pub fn judged(passed: bool, residual: Residual, detail: impl Into<String>) -> Self {
        Outcome { passed, residual, detail: detail.into() }
    }

    /// Numeric outcome over labelled samples: the worst defect decides; any error fails.
    pub fn sweep(tol: f64, it: impl IntoIterator<Item = crate::error::Result<(String, f64)>>) -> Self {
        let mut w = (f64::NEG_INFINITY, String::from("no samples"));
        for r in it {
            match r {
                Ok((label, d)) => {
                    if d.is_nan() || d > w.0 {
                        w = (d, label);
                    }
                }
                Err(e) => return Outcome::numeric(f64::INFINITY, tol, e.to_string()),
            }
        }
        let d = if w.0.is_nan() { w.0 } else { w.0.max(0.0) };
        let label = w.1;
        Outcome::numeric(d, tol, format!("worst defect {d:.3e} at {label}"))
    }

    /// Joins parts; passes iff all pass. The residual is the worst part.
    pub fn all(parts: Vec<(String, Outcome)>) -> Self {
        let passed = parts.iter().all(|(_, o)| o.passed);
        let residual = parts.iter().map(|(_, o)| o.residual.clone()).fold(None, |acc: Option<Residual>, r| {
            Some(match (acc, r) {
                (None, r) => r,
                (Some(Residual::Terms(a)), Residual::Terms(b)) => Residual::Terms(a + b),
                (Some(Residual::Norm(a)), Residual::Norm(b)) => Residual::Norm(if b.is_nan() { b } else { a.max(b) }),
                (Some(a), _) => a,
            })
        });
        let detail = match parts.iter().find(|(_, o)| !o.passed) {
            Some((label, o)) => format!("{label}: {}", o.detail),
            None => format!("{} parts pass", parts.len()),
        };
        Outcome { passed, residual: residual.unwrap_or(Residual::Terms(0)), detail }
    }
}
