//! Gluing lower bounds for every preset, then a hand-built gluing with a
//! shift pushed past its default.

use sqenergy::gluing::{glue, gluing_lower_bound, Attachment, GluingSpec, Preset};
use sqenergy::FamilySpec;

fn main() -> sqenergy::Result<()> {
    println!("{:<6} {:>5} {:>10} {:>10} {:>10}", "preset", "order", "bound", "s+", "margin");
    for p in Preset::ALL {
        // the gt3 shift is only large enough once the attached path has order 10
        let (t, attach) = if p == Preset::Gt3 { (10, 10) } else { (2, 4) };
        let b = gluing_lower_bound(&p.gluing(t, attach)?)?;
        println!("{:<6} {:>5} {:>10.5} {:>10.5} {:>10.5}", p.name(), b.order, b.bound, b.glued_s_plus, b.margin);
    }

    let path = FamilySpec::Path(4).build()?;
    let mut spec = GluingSpec {
        base: FamilySpec::Cycle(5).build()?,
        glue_points: vec![0, 2],
        attachments: vec![Attachment::new(path.clone(), 0), Attachment::new(path, 1)],
    };
    let d = glue(&spec)?.default_shifts;
    println!("\ncycle(5) with two path(4) attachments, default shifts {d:?}");
    for extra in [0.0, 0.25, 1.0] {
        for (a, di) in spec.attachments.iter_mut().zip(&d) {
            a.shift = Some(di + extra);
        }
        let b = gluing_lower_bound(&spec)?;
        println!("  shift +{extra:<4}  bound {:.5}  s+ {:.5}", b.bound, b.glued_s_plus);
    }
    Ok(())
}
