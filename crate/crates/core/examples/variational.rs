//! `s⁺(A) = min ‖A + M‖²` over PSD `M`, solved by projected gradient.

use sqenergy::spectral::{variational_splus, VariationalOptions};
use sqenergy::FamilySpec;

fn main() -> sqenergy::Result<()> {
    for spec in ["path(7)", "cycle(9)", "tripaths(2,1,1)", "join(cycle(4),empty(3))"] {
        let a = spec.parse::<FamilySpec>()?.build()?.adjacency_matrix();
        let v = variational_splus(&a, VariationalOptions::default())?;
        println!(
            "{spec:<24} s+ {:.10}  gradient {:.10} after {} steps ({})  at A- {:.10}",
            v.s_plus,
            v.value,
            v.iterations,
            if v.converged { "converged" } else { "stopped" },
            v.value_at_a_minus
        );
    }
    Ok(())
}
