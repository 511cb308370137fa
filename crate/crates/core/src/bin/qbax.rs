use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde::Serialize;
use serde_json::json;

use qbax::catalog::{fault_injection_check, AlgebraId};
use qbax::classical::{continuum_check, zc_residual, ContinuumSpec, FieldPreset, Model, ZcPreset, MIN_ORDER};
use qbax::cyclicrep::{rep_for, rll_sweep};
use qbax::lmatrices::pairings;
use qbax::qdilog::{feq_defect, s_omega, sdil_defect, unitarity_defect, DilogParams, FeqId};
use qbax::report::{docs_table, registry, run_suite, Outcome, RunConfig, RunOptions};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "qbax", version, about = "Exact and numerical verification of Baxterized L-matrices")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = RunConfig::default().seed)]
    seed: u64,
    /// Overrides every numeric tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Longest chain for transfer-matrix checks.
    #[arg(long, global = true, default_value_t = RunConfig::default().max_sites)]
    max_sites: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Run registered checks whose id matches a glob.
    Verify {
        #[arg(default_value = "all")]
        filter: String,
        /// Record wall time per check; timed reports are not reproducible.
        #[arg(long)]
        timing: bool,
        /// Add the confluence check of a presentation missing its `c b` rule.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Quantum dilogarithm evaluation and functional equations.
    Qdilog {
        #[command(subcommand)]
        cmd: QdilogCmd,
    },
    /// Root-of-unity matrix representations.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Classical limits of the lattice models.
    Classical {
        #[command(subcommand)]
        cmd: ClassicalCmd,
    },
    /// Registry exports.
    Report {
        #[command(subcommand)]
        cmd: ReportCmd,
    },
}

#[derive(Subcommand, Debug)]
enum QdilogCmd {
    /// S_ω(x) with its difference-equation and unitarity defects.
    Eval {
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        x: f64,
    },
    /// Defect of one scalar functional equation.
    Feq {
        /// rw, rw3 or rbd3pp.
        #[arg(long)]
        id: String,
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        w: f64,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Relation residuals and central values of one representation.
    Check {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Numeric RLL residuals of registered pairings at seeded unit-circle points.
    Rll {
        /// Glob over pairing ids.
        #[arg(default_value = "*")]
        pairing: String,
    },
}

#[derive(Subcommand, Debug)]
enum ClassicalCmd {
    /// Lattice-to-continuum convergence along κ = length/sites.
    Continuum {
        #[arg(long, default_value = "liouville")]
        model: String,
        #[arg(long, default_value = "sine")]
        field: String,
        #[arg(long, value_delimiter = ',', default_value = "16,32,64,128")]
        sites: Vec<usize>,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        length: f64,
    },
    /// Zero-curvature residual of a preset pair.
    Zc {
        #[arg(long, default_value = "liouville")]
        preset: String,
    },
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    /// Markdown table of every registered check.
    Docs {
        /// Run the suite and fill in the status column.
        #[arg(long)]
        run: bool,
    },
}

/// What a verb prints and whether it passed.
struct Output {
    passed: bool,
    text: String,
    json: serde_json::Value,
}

fn bad(msg: String) -> Result<Output, String> {
    Err(msg)
}

fn outcome_output(label: &str, o: &Outcome, extra: serde_json::Value) -> Output {
    let status = if o.passed { "PASS" } else { "FAIL" };
    Output {
        passed: o.passed,
        text: format!("{status} {label}: {}\n", o.detail),
        json: json!({ "label": label, "outcome": o, "data": extra }),
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(cli: &Cli) -> Result<Output, String> {
    let cfg = RunConfig { seed: cli.seed, tol: cli.tol, max_sites: cli.max_sites };
    let err = |e: qbax::error::QbaxError| e.to_string();
    match &cli.verb {
        Verb::Verify { filter, timing, inject_fault } => {
            let mut checks = registry();
            if *inject_fault {
                checks.push(fault_injection_check());
            }
            let r = run_suite(&checks, filter, &cfg, RunOptions { timing: *timing });
            Ok(Output { passed: r.ok(), text: r.to_text(), json: to_json(&r) })
        }
        Verb::Qdilog { cmd: QdilogCmd::Eval { omega, x } } => {
            let tol = cfg.tol_or(1e-8);
            let p = DilogParams::new(*omega).map_err(err)?;
            let s = s_omega(C64::new(*x, 0.0), &p).map_err(err)?;
            let d = sdil_defect(*omega, C64::new(x.ln(), 0.0)).map_err(err)?;
            let u = unitarity_defect(*omega, *x).map_err(err)?;
            let o = Outcome::numeric(d.max(u), tol, format!("S = {s:.12}, |S| = {:.15}, sdil defect {d:.3e}, unitarity defect {u:.3e}", s.norm()));
            Ok(outcome_output(&format!("S_{omega}({x})"), &o, json!({ "omega": omega, "x": x, "s": [s.re, s.im], "sdil_defect": d, "unitarity_defect": u })))
        }
        Verb::Qdilog { cmd: QdilogCmd::Feq { id, omega, lambda, w } } => {
            let Some(f) = FeqId::from_name(id) else { return bad(format!("unknown functional equation `{id}`; expected rw, rw3 or rbd3pp")) };
            let d = feq_defect(f, *omega, *lambda, *w).map_err(err)?;
            let o = Outcome::numeric(d, cfg.tol_or(1e-8), format!("relative defect {d:.3e}"));
            Ok(outcome_output(&format!("{id} at ω={omega}, λ={lambda}, w={w}"), &o, json!({ "defect": d })))
        }
        Verb::Rep { cmd: RepCmd::Check { algebra, n, m } } => {
            let Some(id) = AlgebraId::from_name(algebra) else { return bad(format!("unknown algebra `{algebra}`")) };
            let sum = rep_for(id, *n, *m).and_then(|r| r.summary()).map_err(err)?;
            let tol = cfg.tol_or(1e-12);
            let worst = sum.relations.iter().map(|(_, d)| *d).chain(sum.central.iter().map(|(_, _, off)| *off)).fold(0.0, f64::max);
            let mut text = String::new();
            for (rel, d) in &sum.relations {
                text.push_str(&format!("relation {rel}: {d:.3e}\n"));
            }
            for (name, v, off) in &sum.central {
                text.push_str(&format!("central {name} = {v:.6} (off-scalar {off:.3e})\n"));
            }
            let o = Outcome::numeric(worst, tol, format!("{} N={n} m={m}: worst residual {worst:.3e}", id.name()));
            let mut out = outcome_output(id.name(), &o, to_json(&sum));
            out.text = text + &out.text;
            Ok(out)
        }
        Verb::Rep { cmd: RepCmd::Rll { pairing } } => {
            let pat = glob::Pattern::new(pairing).map_err(|e| e.to_string())?;
            let chosen: Vec<_> = pairings().into_iter().filter(|p| pat.matches(p.id)).collect();
            if chosen.is_empty() {
                return bad(format!("no pairing matches `{pairing}`"));
            }
            let tol = cfg.tol_or(1e-10);
            let parts: Vec<(String, Outcome)> =
                chosen.iter().map(|p| (p.id.to_string(), Outcome::sweep(tol, rll_sweep(p.r, p.l, cfg.seed)))).collect();
            let text: String = parts.iter().map(|(id, o)| format!("{} {id}: {}\n", if o.passed { "PASS" } else { "FAIL" }, o.detail)).collect();
            let o = Outcome::all(parts.clone());
            let mut out = outcome_output("numeric RLL", &o, to_json(&parts));
            out.text = text + &out.text;
            Ok(out)
        }
        Verb::Classical { cmd: ClassicalCmd::Continuum { model, field, sites, beta, length } } => {
            let Some(model) = Model::from_name(model) else { return bad(format!("unknown model `{model}`")) };
            let Some(field) = FieldPreset::from_name(field) else { return bad(format!("unknown field `{field}`")) };
            let spec = ContinuumSpec { model, field, beta: *beta, length: *length, sites: sites.clone() };
            let r = continuum_check(&spec).map_err(err)?;
            let mut text = String::new();
            for (i, k) in r.kappas.iter().enumerate() {
                let ord = if i == 0 { String::new() } else { r.orders[i - 1].map_or("  order exact".into(), |o| format!("  order {o:.3}")) };
                text.push_str(&format!("κ={k:.6}  lattice {:.10}  error {:.3e}{ord}\n", r.lattice[i], r.errors[i]));
            }
            let o = Outcome::judged(
                r.converges_with_order(MIN_ORDER),
                qbax::report::Residual::Norm(*r.errors.last().unwrap_or(&f64::NAN)),
                format!("continuum {:.10}, constant {:.6}, min order {:?}", r.continuum, r.constant, r.min_order()),
            );
            let mut out = outcome_output(&format!("{} / {}", model.name(), field.name()), &o, to_json(&r));
            out.text = text + &out.text;
            Ok(out)
        }
        Verb::Classical { cmd: ClassicalCmd::Zc { preset } } => {
            let Some(p) = ZcPreset::from_name(preset) else { return bad(format!("unknown preset `{preset}`")) };
            let z = zc_residual(p).map_err(err)?;
            let mut text = String::new();
            for (i, row) in z.raw.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    text.push_str(&format!("raw[{i}][{j}] = {e}\nreduced[{i}][{j}] = {}\n", z.reduced[i][j]));
                }
            }
            let o = Outcome::exact(z.reduced_terms(), format!("{} raw terms reduce to {}", z.raw_terms(), z.reduced_terms()));
            let cells = |m: &qbax::classical::DiffMatrix| m.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>();
            let mut out = outcome_output(p.name(), &o, json!({ "raw": cells(&z.raw), "reduced": cells(&z.reduced) }));
            out.text = text + &out.text;
            Ok(out)
        }
        Verb::Report { cmd: ReportCmd::Docs { run } } => {
            let checks = registry();
            let rep = run.then(|| run_suite(&checks, "all", &cfg, RunOptions::default()));
            let table = docs_table(&checks, rep.as_ref());
            Ok(Output { passed: rep.as_ref().is_none_or(|r| r.ok()), json: json!({ "markdown": table }), text: table })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
