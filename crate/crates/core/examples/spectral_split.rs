//! Spectrum, inertia and the split `A = A⁺ − A⁻` of a family graph.
//!
//! `cargo run --example spectral_split -- "tripaths(2,1,0)"`

use sqenergy::spectral::graph_split;
use sqenergy::FamilySpec;

fn main() -> sqenergy::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "cycle(6)".into());
    let g = arg.parse::<FamilySpec>()?.build()?;
    let s = graph_split(&g)?;
    println!("{arg}: n = {}, m = {}", g.n(), g.m());
    println!("spectrum: {:?}", s.eigenvalues().iter().map(|l| format!("{l:.6}")).collect::<Vec<_>>());
    println!("inertia:  {:?}", s.inertia());
    println!("s+ = {:.10}  s- = {:.10}  s+ + s- = 2m = {}", s.s_plus(), s.s_minus(), 2 * g.m());
    println!("A- diagonal: {:?}", (0..g.n()).map(|v| format!("{:.4}", s.a_minus.get(v, v))).collect::<Vec<_>>());
    Ok(())
}
