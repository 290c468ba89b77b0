//! Runs verification suites and prints one line per suite. Pass suite names
//! as arguments (default: a fast subset); `all` runs everything.

use quasimap::relations::{run, Profile, Status};

fn main() -> quasimap::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["asyz", "d-closure", "root-symmetry", "table-33", "k3-quadratic"].map(String::from).to_vec();
    }
    let report = run(&names, &Profile::quick())?;
    for s in &report.suites {
        println!("{:<24} {:?}", s.suite, s.status);
        for r in s.results.iter().filter(|r| r.status == Status::Fail) {
            println!("    {} first mismatch {:?}", r.id, r.first_mismatch);
        }
    }
    println!("overall: {:?}", report.status);
    Ok(())
}
