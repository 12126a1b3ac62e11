//! Runs every acceptance criterion at its tolerance and time budget,
//! printing one verdict line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;

use cfk_cli::checks::{criterion_ids, run_checks};

const SEED: u64 = 20_240_601;

fn main() -> ExitCode {
    let ids: Vec<u8> = criterion_ids().collect();
    let outcomes = run_checks(&ids, SEED, false);
    for o in &outcomes {
        println!("{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    println!("acceptance: {passed}/{} criteria passed", ids.len());
    if passed == ids.len() && outcomes.len() == ids.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
