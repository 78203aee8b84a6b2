//! Canonical forms, orbits and automorphism group sizes.

use sqenergy::canon::{are_isomorphic, canonical};
use sqenergy::{graph6, FamilySpec, Graph};

fn main() -> sqenergy::Result<()> {
    let mut petersen = Vec::new();
    for i in 0..5 {
        petersen.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    let graphs = vec![
        ("petersen".to_string(), Graph::from_edges(10, &petersen)?),
        ("cycle(8)".to_string(), FamilySpec::Cycle(8).build()?),
        ("tripaths(2,2,1)".to_string(), FamilySpec::TrianglePaths(2, 2, 1).build()?),
        ("bipartite(3,3)".to_string(), FamilySpec::CompleteBipartite(3, 3).build()?),
    ];
    for (name, g) in &graphs {
        let c = canonical(g)?;
        println!("{name:<16} |Aut| = {:<6} orbits {:?}", c.automorphism_count, c.orbit);
        println!("{:<16} canonical graph6 {}", "", graph6::encode(&c.canonical_graph(g)));
    }
    let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])?;
    let k33 = FamilySpec::CompleteBipartite(3, 3).build()?;
    let c6 = FamilySpec::Cycle(6).build()?;
    println!("\nprism ~ K3,3: {}", are_isomorphic(&prism, &k33)?);
    println!("prism ~ complement of C6: {}", are_isomorphic(&prism, &c6.complement())?);
    Ok(())
}
