//! Runs a named check suite and prints one line per case. Reports carry no
//! timings, so the same seed gives byte-identical output.

use conjcoarse::coarse::Budget;
use conjcoarse::suite::{run_suite, SUITES};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "entourage-algebra".into());
    let report = run_suite(&name, 7, &Budget::default()).unwrap_or_else(|e| {
        eprintln!("{e}; suites: {}", SUITES.join(", "));
        std::process::exit(3);
    });
    for section in &report.sections {
        println!("[{}] {}", if section.passed { "ok" } else { "FAIL" }, section.suite);
        for c in &section.cases {
            println!("  {} {:<40} {}", if c.passed { "+" } else { "-" }, c.name, c.group);
        }
    }
    println!("passed: {}", report.passed);
}
