//! Strips induced P₃s from a graph until only cliques remain, printing each
//! step's energy drop and the resulting lower bound.
//!
//! `cargo run --release --example removal_trace -- "cyclepower(40,3)" minus`

use sqenergy::removal::{epsilon_inequality_check, p3_lemma_margin, p3_strip, telescoped_bound, EPSILON};
use sqenergy::{FamilySpec, Sign};

fn main() -> sqenergy::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec: FamilySpec = args.next().unwrap_or_else(|| "cyclepower(20,2)".into()).parse()?;
    let sign = match args.next().as_deref() {
        Some("plus") => Sign::Plus,
        _ => Sign::Minus,
    };
    let g = spec.build()?;
    let trace = p3_strip(&g, sign)?;
    for s in &trace.steps {
        println!(
            "remove {:>3} from P3 {:?}: s{} {:.4} -> {:.4} (drop {:.4}{})",
            s.removed,
            s.p3,
            sign.symbol(),
            s.energy_before,
            s.energy_after,
            s.drop,
            if s.valid { "" } else { ", below 1+eps" }
        );
    }
    println!("residual cliques {:?}", trace.residual_cliques);
    println!("telescoped bound {:.4}, all steps valid: {}", telescoped_bound(&trace), trace.all_valid());
    if let Some(m) = p3_lemma_margin(&g, sign)? {
        println!("smallest drop over every induced P3 of the input, minus 1+eps: {m:.4}");
    }
    let eps = epsilon_inequality_check(EPSILON, 1e-5)?;
    println!("epsilon inequality at {EPSILON}: min margin {:.5} at x = {:.5}; largest passing epsilon {:.4}", eps.min_margin, eps.argmin, eps.max_epsilon);
    Ok(())
}
