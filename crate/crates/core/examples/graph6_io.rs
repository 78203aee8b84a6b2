//! Writes the connected graphs of one order to a graph6 file and reads them
//! back.
//!
//! `cargo run --release --example graph6_io -- 6 /tmp/conn6.g6`

use std::fs::File;
use std::io::BufWriter;

use sqenergy::enumerate::connected_graphs;
use sqenergy::graph6;

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let path = args.next().unwrap_or_else(|| std::env::temp_dir().join("connected.g6").display().to_string());
    let graphs = connected_graphs(n)?;
    graph6::write_all(BufWriter::new(File::create(&path)?), &graphs)?;
    let back = graph6::read_file(path.as_ref())?;
    println!("wrote {} graphs to {path}, read back {}, identical: {}", graphs.len(), back.len(), back == graphs);
    for g in back.iter().take(5) {
        println!("  {} n={} m={}", graph6::encode(g), g.n(), g.m());
    }
    Ok(())
}
