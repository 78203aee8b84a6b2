//! Counts connected and all graphs per order, with timing.
//!
//! `cargo run --release --example enumerate_counts -- 8`

use std::time::Instant;

use sqenergy::enumerate::{all_graphs, enumerate_connected};

fn main() -> sqenergy::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    println!("{:>2} {:>10} {:>10} {:>9}", "n", "connected", "all", "seconds");
    for n in 1..=max_n {
        let t = Instant::now();
        let connected = enumerate_connected(n, |_| {})?;
        let all = all_graphs(n)?.len();
        println!("{n:>2} {connected:>10} {all:>10} {:>9.2}", t.elapsed().as_secs_f64());
    }
    Ok(())
}
