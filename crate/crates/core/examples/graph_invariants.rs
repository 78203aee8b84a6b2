//! Exact invariants next to the square energies, for a few small graphs.
//!
//! `cargo run --example graph_invariants`

use sqenergy::invariants::invariants;
use sqenergy::spectral::graph_energies;
use sqenergy::FamilySpec;

fn main() -> sqenergy::Result<()> {
    let specs = ["path(6)", "cycle(7)", "bipartite(3,4)", "pentagon(1,2)", "figure(4)", "join(cycle(5),empty(2))"];
    println!("{:<26} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>9} {:>9}", "graph", "n", "w", "a", "g", "a'", "diam", "s+", "s-");
    for s in specs {
        let g = s.parse::<FamilySpec>()?.build()?;
        let i = invariants(&g);
        let e = graph_energies(&g)?;
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{s:<26} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>9.4} {:>9.4}",
            i.n,
            show(i.omega),
            show(i.alpha),
            show(i.gamma),
            i.alpha_prime,
            show(i.diam),
            e.s_plus,
            e.s_minus
        );
    }
    Ok(())
}
