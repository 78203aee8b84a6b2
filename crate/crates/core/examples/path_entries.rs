//! Closed-form vs numeric entries of `A⁻(P_ℓ)`.
//!
//! `cargo run --release --example path_entries -- 1 20`

use sqenergy::sweep::{path_endpoint_row, path_offdiag_row};

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<usize>().ok());
    let a = args.next().unwrap_or(1);
    let b = args.next().unwrap_or(20);
    println!("{:>4} {:>14} {:>14} {:>6} {:>10} {:>10}", "l", "endpoint", "numeric", "bound", "offdiagErr", "midMin");
    for l in a..=b {
        let e = path_endpoint_row(l)?;
        let (err, mid) = if l >= 3 {
            let o = path_offdiag_row(l)?;
            (format!("{:.1e}", o.max_abs_error), o.min_middle.map_or("-".into(), |m| format!("{m:.5}")))
        } else {
            ("-".into(), "-".into())
        };
        println!("{l:>4} {:>14.10} {:>14.10} {:>6} {err:>10} {mid:>10}", e.closed_form, e.numeric, e.bound);
    }
    Ok(())
}
