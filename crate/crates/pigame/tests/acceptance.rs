//! Prints one status line per acceptance criterion and fails on any
//! failure. Criterion 4 carries one known divergence from a published
//! value, and that divergence is itself pinned here.

use std::process::ExitCode;

use pigame::selftest::{run_all, Outcome, Status};

fn main() -> ExitCode {
    let results = run_all();
    let mut ok = results.len() == 8;
    for c in &results {
        println!("{}", c.render());
        let divergent: Vec<&str> = c
            .checks
            .iter()
            .filter(|k| matches!(k.outcome, Outcome::Divergent(_)))
            .map(|k| k.name.as_str())
            .collect();
        let expected: &[&str] = if c.id == 4 {
            &["Solomonic allocation"]
        } else {
            &[]
        };
        if c.status() == Status::Fail || divergent != expected {
            println!("    unexpected status for criterion {}", c.id);
            ok = false;
        }
    }
    let count = |s: Status| results.iter().filter(|c| c.status() == s).count();
    println!(
        "acceptance: {} pass, {} divergent (documented), {} fail",
        count(Status::Pass),
        count(Status::Divergent),
        count(Status::Fail)
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
