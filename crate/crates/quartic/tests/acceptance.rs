//! Acceptance gate: runs every verification criterion at its stated
//! tolerance and prints one PASS/FAIL line per record. Shares the record
//! definitions with `quartic verify` so the CLI and this gate cannot drift.

use quartic::cli;

#[test]
fn acceptance_criteria() {
    let report = cli::verify_report(false, 1).expect("verification suite must run to completion");
    let mut failed = Vec::new();
    for r in &report.records {
        println!(
            "[{}] {:>3}  expected {:<14} actual {:<14} tol {:<10}  {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            cli::fmt_sig8(r.expected),
            cli::fmt_sig8(r.actual),
            cli::fmt_sig8(r.tolerance),
            r.description
        );
        if !r.pass {
            failed.push(r.id.clone());
        }
    }
    assert!(
        report.overall_pass,
        "failing acceptance records: {failed:?}"
    );
}
