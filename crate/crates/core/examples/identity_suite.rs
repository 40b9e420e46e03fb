//! Runs every core identity on a θ-graph and prints a pass/fail table.
//!
//! `cargo run --release --example identity_suite -- [spec.json] [max-degree]`

use std::sync::Arc;
use std::time::Instant;

use twograph::algebra::{run_identity_suite, SuiteConfig};
use twograph::{Degree, ThetaGraph, ThetaSpec};

fn main() -> twograph::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = match args.next() {
        Some(path) => ThetaSpec::load(path)?,
        None => ThetaSpec::flip(2, 2),
    };
    let max_degree: Degree = match args.next() {
        Some(d) => d.parse()?,
        None => Degree::new(2, 2),
    };
    let graph = Arc::new(ThetaGraph::new(spec)?);
    let start = Instant::now();
    let report = run_identity_suite(&graph, SuiteConfig { max_degree, ..SuiteConfig::default() })?;
    for check in &report.checks {
        let status = if check.passed() { "ok  " } else { "FAIL" };
        println!("{status} {:<26} {:>8} cases", check.name, check.cases);
        if let Some(case) = &check.first_failure {
            println!("     first failure: {case}");
        }
    }
    println!("{} checks in {:.1?}", report.checks.len(), start.elapsed());
    Ok(())
}
