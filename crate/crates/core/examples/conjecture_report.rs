//! Runs one conjecture or theorem check over all connected graphs up to an
//! order and prints the JSON report.
//!
//! `cargo run --release --example conjecture_report -- theorems 8`

use sqenergy::conjecture::{run_check, CheckId, Universe};

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().and_then(|s| CheckId::from_name(&s)).unwrap_or(CheckId::C1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let report = run_check(id, &Universe::connected(n), true)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
