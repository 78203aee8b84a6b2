//! Square energies of powers of cycles and the clique gaps left by P₃
//! removal.
//!
//! `cargo run --release --example cycle_powers -- 16 33 60`

use sqenergy::removal::{gap_structure_check, hamiltonian_power_check};

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let k = args.next().unwrap_or(3);
    let a = args.next().unwrap_or(2 * k + 1);
    let b = args.next().unwrap_or(a + 20);
    println!("{:>4} {:>10} {:>10} {:>8} {:>10}", "n", "s+", "s-", "cliques", "minGap");
    for n in a..=b {
        let h = hamiltonian_power_check(n, k)?;
        let gaps = gap_structure_check(n, k)?;
        println!("{n:>4} {:>10.4} {:>10.4} {:>8} {:>10}", h.s_plus, h.s_minus, gaps.cliques, gaps.min_gap.map_or("-".into(), |g| g.to_string()));
    }
    Ok(())
}
