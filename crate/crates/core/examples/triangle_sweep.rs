//! `s⁺` of the shifted triangle-with-three-paths bases against `3(t+1)`,
//! written as CSV to stdout.
//!
//! `cargo run --release --example triangle_sweep -- 2 50 > gt2.csv`

use sqenergy::gluing::gamma_sweep;

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let a = args.next().unwrap_or(2);
    let b = args.next().unwrap_or(30);
    let variant = args.next().unwrap_or(2) as u8;
    let s = gamma_sweep(variant, a..=b)?;
    s.write_csv(std::io::stdout().lock())?;
    eprintln!("min margin {:.5}, violations at t = {:?}", s.min_margin, s.violations);
    Ok(())
}
