//! The nine acceptance criteria, one PASS/FAIL line each. Exits non-zero if
//! any criterion fails.

use selfdual::suite::{run_criterion, TITLES};

fn main() {
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() {
        let report = run_criterion(id, 0).expect("criterion ids are in range");
        println!("{report}");
        if !report.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", TITLES.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
