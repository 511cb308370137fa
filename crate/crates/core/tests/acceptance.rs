//! Runs every acceptance criterion at its stated tolerance and prints one line per criterion.

use std::time::{Duration, Instant};

use qbax::catalog::{fault_injection_check, identity_registry, AlgebraId, FAULT_OVERLAP};
use qbax::classical::{continuum_check, ContinuumSpec, FieldPreset, Model};
use qbax::cyclicrep::transfer_kinds;
use qbax::lmatrices::pairings;
use qbax::report::{registry, run_suite, Check, Outcome, Residual, RunConfig, RunOptions, SuiteReport};

type Criterion = fn(&[Check], &RunConfig) -> Verdict;

struct Verdict {
    passed: bool,
    summary: String,
}

fn find<'a>(reg: &'a [Check], id: &str) -> Result<&'a Check, String> {
    reg.iter().find(|c| c.id == id).ok_or_else(|| format!("check {id} is not registered"))
}

fn run(reg: &[Check], id: &str, cfg: &RunConfig) -> Result<Outcome, String> {
    Ok((find(reg, id)?.run)(cfg))
}

/// Every id must leave exactly zero terms.
fn exact_zero(reg: &[Check], ids: &[String], cfg: &RunConfig) -> Result<usize, String> {
    for id in ids {
        let o = run(reg, id, cfg)?;
        if !(o.passed && o.residual == Residual::Terms(0)) {
            return Err(format!("{id}: {:?}, {}", o.residual, o.detail));
        }
    }
    Ok(ids.len())
}

/// Every id must leave a numeric defect below `tol`, judged here rather than by the registered tolerance.
fn below(reg: &[Check], ids: &[String], tol: f64, cfg: &RunConfig) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for id in ids {
        let o = run(reg, id, cfg)?;
        match o.residual {
            Residual::Norm(d) if d < tol => worst = worst.max(d),
            r => return Err(format!("{id}: {r:?} not below {tol:e} ({})", o.detail)),
        }
    }
    Ok(worst)
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Result<String, String>) -> Verdict {
    let t0 = Instant::now();
    let r = f();
    let dt = t0.elapsed();
    let late = limit.is_some_and(|l| dt > l);
    let limit_text = limit.map_or(String::new(), |l| format!(" (limit {} s)", l.as_secs()));
    match r {
        Ok(s) if !late => Verdict { passed: true, summary: format!("{s}; {:.2} s{limit_text}", dt.as_secs_f64()) },
        Ok(s) => Verdict { passed: false, summary: format!("{s}; too slow: {:.2} s{limit_text}", dt.as_secs_f64()) },
        Err(e) => Verdict { passed: false, summary: e },
    }
}

fn ids(v: impl IntoIterator<Item = impl Into<String>>) -> Vec<String> {
    v.into_iter().map(Into::into).collect()
}

fn symbolic_rll(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(Some(Duration::from_secs(60)), || {
        let n = exact_zero(reg, &ids(pairings().iter().map(|p| p.id)), cfg)?;
        Ok(format!("{n} R/L pairings leave 0 terms"))
    })
}

fn identity_suite(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        let entries = identity_registry();
        if entries.len() < 25 {
            return Err(format!("only {} registered identities", entries.len()));
        }
        let mut want = ids(entries.iter().filter(|e| e.expect_zero).map(|e| e.id));
        want.extend(ids(["hecke", "rsym", "qdet-convention", "qdet-ghat-sign", "lmatrix-images", "twists", "ybe-r", "ybe-rhat"]));
        let n = exact_zero(reg, &want, cfg)?;
        for e in entries.iter().filter(|e| !e.expect_zero) {
            let o = run(reg, e.id, cfg)?;
            if !o.passed {
                return Err(format!("control {}: {}", e.id, o.detail));
            }
        }
        Ok(format!("{} registered identities; {n} equation checks exact", entries.len()))
    })
}

fn confluence(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        let n = exact_zero(reg, &ids(AlgebraId::ALL.iter().map(|a| format!("confluence-{}", a.name()))), cfg)?;
        let o = (fault_injection_check().run)(cfg);
        if o.passed || !o.detail.contains(FAULT_OVERLAP) {
            return Err(format!("fault injection not detected as designed: {}", o.detail));
        }
        Ok(format!("{n} presentations confluent; injected fault fails at overlap {FAULT_OVERLAP}"))
    })
}

fn transfer(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(Some(Duration::from_secs(300)), || {
        let mut want = ids((1..=3).map(|n| format!("transfer-rg-lambda-free-n{n}")));
        for n in 2..=3 {
            want.extend(ids([format!("transfer-ghat-commute-n{n}"), format!("transfer-qdst-commute-n{n}"), format!("qdst-expansion-n{n}")]));
        }
        let n = exact_zero(reg, &want, cfg)?;
        Ok(format!("{n} transfer-matrix checks exact"))
    })
}

fn dilog(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        let grid = below(reg, &ids(["qdilog-sdil-grid", "qdilog-unitarity-grid"]), 1e-8, cfg)?;
        let random = below(reg, &ids(["qdilog-ssw", "qdilog-rw", "qdilog-rw3", "qdilog-rbd3pp"]), 1e-8, cfg)?;
        let spread = below(reg, &ids(["qdilog-rv5-rv3"]), 1e-7, cfg)?;
        Ok(format!("grid {grid:.1e}, random samples {random:.1e} (< 1e-8); w-spread {spread:.1e} (< 1e-7)"))
    })
}

fn numeric_channel(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        if cfg.max_sites != 3 {
            return Err(format!("transfer commutators must run at 3 sites, config has {}", cfg.max_sites));
        }
        let rep = below(reg, &ids(["rep-relations", "rep-central"]), 1e-12, cfg)?;
        let rll = below(reg, &ids(pairings().iter().map(|p| format!("num-{}", p.id))), 1e-10, cfg)?;
        let tr = below(reg, &ids(transfer_kinds().iter().map(|(k, _)| format!("num-transfer-{k}"))), 1e-10, cfg)?;
        Ok(format!("representations {rep:.1e} (< 1e-12); RLL {rll:.1e}, transfer commutators {tr:.1e} (< 1e-10)"))
    })
}

fn classical(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        exact_zero(reg, &ids(["zc-liouville", "zc-freefield-volterra", "zc-freefield-liouvillelimit"]), cfg)?;
        let mut lowest = f64::INFINITY;
        for model in [Model::Liouville, Model::FreefieldVolterra, Model::FreefieldLiouvilleLimit] {
            for field in [FieldPreset::Sine, FieldPreset::Mixed] {
                let spec = ContinuumSpec::standard(model, field);
                let r = continuum_check(&spec).map_err(|e| e.to_string())?;
                let k = &r.kappas;
                if k.len() != 4 || (1..4).any(|i| (k[i - 1] / k[i] - 2.0).abs() > 1e-12) {
                    return Err(format!("κ sweep {k:?} is not κ, κ/2, κ/4, κ/8"));
                }
                let order = r.min_order().unwrap_or(f64::INFINITY);
                if !r.monotone || order < 1.0 {
                    return Err(format!("{} / {}: order {order:.3}, errors {:?}", model.name(), field.name(), r.errors));
                }
                lowest = lowest.min(order);
            }
        }
        let dual = below(reg, &ids(["volterra-duality"]), 1e-12, cfg)?;
        let toda = below(reg, &ids(["hto-telescoping"]), 1e-12, cfg)?;
        Ok(format!("zero curvature exact; lowest continuum order {lowest:.3} (≥ 1); duality {dual:.1e}, Toda sum {toda:.1e} (< 1e-12)"))
    })
}

fn determinism(reg: &[Check], cfg: &RunConfig) -> Verdict {
    timed(None, || {
        let a: SuiteReport = run_suite(reg, "all", cfg, RunOptions::default());
        let b = run_suite(reg, "all", cfg, RunOptions::default());
        let (ja, jb) = (a.to_json(), b.to_json());
        if ja != jb || a.to_text() != b.to_text() {
            return Err("two seeded runs differ".into());
        }
        if !a.ok() {
            let bad: Vec<&str> = a.results.iter().filter(|r| r.status == qbax::report::Status::Fail).map(|r| r.id.as_str()).collect();
            return Err(format!("identical reports, but failures: {}", bad.join(", ")));
        }
        Ok(format!("two full runs of {} checks give byte-identical reports ({} bytes)", a.counts.total, ja.len()))
    })
}

fn main() {
    let cfg = RunConfig::default();
    let reg = registry();
    let criteria: [(&str, Criterion); 8] = [
        ("symbolic RLL suite", symbolic_rll),
        ("identity registry", identity_suite),
        ("confluence and fault injection", confluence),
        ("transfer matrices", transfer),
        ("quantum dilogarithm", dilog),
        ("numeric root-of-unity channel", numeric_channel),
        ("classical limits", classical),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f(&reg, &cfg);
        failed += usize::from(!v.passed);
        println!("{} criterion {}: {name}: {}", if v.passed { "PASS" } else { "FAIL" }, i + 1, v.summary);
    }
    println!("{} of {} acceptance criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
