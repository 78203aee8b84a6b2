//! Closed forms against the eigensolver: cycles, joins of regular graphs and
//! the trigonometric bounds behind the path entries.

use sqenergy::closed_forms::{cycle_square_energy, endpoint_crossover, join_spectrum_of, trig_bounds_check};
use sqenergy::spectral::{graph_energies, eigenvalues_sym};
use sqenergy::{FamilySpec, Graph};

fn main() -> sqenergy::Result<()> {
    for n in [3, 4, 5, 6, 7, 12, 31] {
        let (p, m) = cycle_square_energy(n)?;
        let e = graph_energies(&FamilySpec::Cycle(n).build()?)?;
        println!("C{n:<3} s+ {p:>10.6} (numeric {:>10.6})  s- {m:>10.6} (numeric {:>10.6})", e.s_plus, e.s_minus);
    }

    let (c, e) = (FamilySpec::Cycle(6).build()?, FamilySpec::Empty(2).build()?);
    let closed = join_spectrum_of(&c, &e)?;
    let numeric = eigenvalues_sym(&Graph::join(&c, &e)?.adjacency_matrix())?;
    println!("\njoin(cycle(6), empty(2)) top eigenvalue {:.8}, numeric {:.8}, 1+sqrt(13) = {:.8}", closed[0], numeric[0], 1.0 + 13f64.sqrt());

    let t = trig_bounds_check(1e-5, 200);
    for g in &t.checks {
        println!("{:<40} min margin {:>9.6} at {:.4}", g.name, g.min_margin, g.argmin);
    }
    println!("cosine partial sums: max error {:.2e}", t.cosine_sum_max_error);

    let x = endpoint_crossover(0.43, 100);
    println!("path endpoint entry stays below 0.43 from l = {:?}", x.settles_at);
    Ok(())
}
