//! Runs a selection of identity checks and prints one line per report.
//!
//! `cargo run --example verify_suite -- lerch cotangent` selects checks by
//! id; without arguments the whole suite runs.

use stieltjes::{run_suite, TolPolicy, CHECK_IDS};

fn main() -> stieltjes::Result<()> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids.push("all".into());
    }
    let reports = run_suite(&ids, &TolPolicy::default())?;
    for r in &reports {
        let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{} {:<20} {:<40} residual {:>10}  tol {:>10}",
            if r.passed { "PASS" } else { "FAIL" },
            r.check_id,
            inputs.join(" "),
            r.residual.to_decimal(2),
            r.tolerance.to_decimal(2)
        );
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    println!(
        "{passed}/{} passed; known ids: {}",
        reports.len(),
        CHECK_IDS.join(", ")
    );
    Ok(())
}
