//! Acceptance battery: one PASS/FAIL line per criterion, all arithmetic exact.

use std::process::ExitCode;
use std::time::Instant;

use iyang::cli::suite;

fn main() -> ExitCode {
    let criteria: [fn() -> suite::CriterionResult; 8] = [
        suite::quantum_suite,
        suite::classical_suite,
        suite::numerology_suite,
        suite::dictionary_suite,
        suite::collapse_suite,
        suite::pbw_suite,
        suite::robustness_suite,
        suite::gt_suite,
    ];
    let mut failed = 0;
    for run in criteria {
        let start = Instant::now();
        let r = run();
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!("{} {} {}: {} ({:.1}s)", status, r.id, r.name, r.detail, start.elapsed().as_secs_f64());
        if !r.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
