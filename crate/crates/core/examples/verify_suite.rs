//! Running a filtered slice of the registry and rendering the report.

use qbax::report::{docs_table, registry, run_suite, RunConfig, RunOptions};

fn main() {
    let reg = registry();
    let cfg = RunConfig::default();
    let r = run_suite(&reg, "rll-ext-*", &cfg, RunOptions::default());
    print!("{}", r.to_text());
    println!("{}", r.to_json());

    let slice: Vec<_> = reg.iter().filter(|c| c.id.starts_with("confluence-")).cloned().collect();
    let done = run_suite(&slice, "all", &cfg, RunOptions::default());
    print!("{}", docs_table(&slice, Some(&done)));
}
