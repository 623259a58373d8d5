//! The twelve acceptance checks at their stated tolerances, at 1024 bits.
//! Prints one PASS/FAIL line per check and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use expinterp::cli::acceptance;

const PRECISION: u32 = 1024;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in 1..=12 {
        let t = Instant::now();
        let r = acceptance(id, PRECISION);
        println!("{} [{:.1} s]", r.line(), t.elapsed().as_secs_f64());
        if !r.passed {
            failed.push(r.id);
        }
    }
    println!("acceptance: {}/12 passed", 12 - failed.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
