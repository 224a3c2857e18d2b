//! Runs every property suite with the default seed and prints the reports.
//!
//! cargo run --release --example check_suites [suite...]

use setsys::check::{CheckConfig, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suites: Vec<Suite> = if args.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let cfg = CheckConfig::default();
    let mut failed = 0;
    for s in suites {
        let report = s.run(&cfg)?;
        print!("{report}");
        failed += !report.passed() as usize;
    }
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
