//! Independent reference computations: characteristic-polynomial roots,
//! Pólya counting, brute-force isomorphism classes and an external graph6
//! fixture.

mod common;

use std::collections::HashSet;
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use sqenergy::canon::canonical_form;
use sqenergy::enumerate::{all_graphs, connected_graphs};
use sqenergy::graph6;
use sqenergy::spectral::eigenvalues_sym;
use sqenergy::{Graph, SymMatrix};

/// Monic characteristic polynomial coefficients, constant term first, by
/// Faddeev–LeVerrier.
fn char_poly(a: &SymMatrix) -> Vec<f64> {
    let n = a.dim();
    let rows = a.rows();
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let mut m = vec![vec![0.0; n]; n];
    for k in 1..=n {
        let mut am = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                am[i][j] = (0..n).map(|l| rows[i][l] * m[l][j]).sum();
            }
        }
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += c[n - k + 1];
        }
        m = am;
        let tr: f64 = (0..n).map(|i| (0..n).map(|l| rows[i][l] * m[l][i]).sum::<f64>()).sum();
        c[n - k] = -tr / k as f64;
    }
    c
}

fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let p = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32) * 2.0).collect();
    for _ in 0..2000 {
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |d, j| d * (z[i] - z[j]));
            let step = p(z[i]) / denom;
            z[i] -= step;
        }
    }
    z
}

#[test]
fn eigenvalues_match_polynomial_roots() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let a = SymMatrix::from_fn(n, |_, _| rng.gen_range(-3.0..3.0));
        let ours = eigenvalues_sym(&a).unwrap();
        let mut roots: Vec<f64> = durand_kerner(&char_poly(&a)).iter().map(|z| z.re).collect();
        roots.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (x, y) in ours.iter().zip(&roots) {
            assert!((x - y).abs() < 1e-6, "{ours:?} vs {roots:?}");
        }
    }
}

#[test]
fn polya_counts_are_the_known_sequence() {
    let all: Vec<u128> = (1..=9).map(common::burnside_all).collect();
    assert_eq!(all, [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]);
    assert_eq!(&common::burnside_connected(9)[1..], &[1, 1, 2, 6, 21, 112, 853, 11117, 261080]);
}

#[test]
fn enumeration_matches_polya() {
    let conn = common::burnside_connected(8);
    for n in 1..=8 {
        assert_eq!(connected_graphs(n).unwrap().len() as i128, conn[n], "connected n={n}");
    }
    for n in 1..=7 {
        assert_eq!(all_graphs(n).unwrap().len() as u128, common::burnside_all(n), "all n={n}");
    }
}

#[test]
#[ignore = "n = 9 takes a while; run with --ignored"]
fn enumeration_matches_polya_nine() {
    assert_eq!(connected_graphs(9).unwrap().len() as i128, common::burnside_connected(9)[9]);
}

fn pair_bits(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect()
}

/// Smallest edge mask over all relabelings.
fn brute_canon(mask: u32, pairs: &[(usize, usize)], perms: &[Vec<usize>], index: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |m, (_, &(a, b))| m | 1 << index[p[a]][p[b]])
        })
        .min()
        .unwrap_or(mask)
}

#[test]
fn brute_force_classes_agree_with_enumerator() {
    for n in 1..=6usize {
        let pairs = pair_bits(n);
        let mut index = vec![vec![0; n]; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            index[a][b] = i;
            index[b][a] = i;
        }
        let perms = common::permutations(n);
        let mut classes = HashSet::new();
        let mut connected = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let c = brute_canon(mask, &pairs, &perms, &index);
            if classes.insert(c) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).map(|(_, &e)| e).collect();
                if Graph::from_edges(n, &edges).unwrap().is_connected() {
                    connected.insert(c);
                }
            }
        }
        assert_eq!(classes.len(), all_graphs(n).unwrap().len(), "all n={n}");
        assert_eq!(connected.len(), connected_graphs(n).unwrap().len(), "connected n={n}");
        let brute_of = |g: &Graph| {
            let mask = pairs.iter().enumerate().filter(|(_, &(a, b))| g.has_edge(a, b)).fold(0u32, |m, (i, _)| m | 1 << i);
            brute_canon(mask, &pairs, &perms, &index)
        };
        let ours: HashSet<u32> = all_graphs(n).unwrap().iter().map(brute_of).collect();
        assert_eq!(ours, classes, "n={n}");
    }
}

fn fixture() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected8.g6")
}

#[test]
fn external_fixture_matches_enumerator() {
    let external = graph6::read_file(&fixture()).unwrap();
    assert_eq!(external.len(), 11117);
    assert!(external.iter().all(|g| g.n() == 8 && g.is_connected()));
    let theirs: HashSet<_> = external.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(theirs.len(), 11117);
    let ours: HashSet<_> = connected_graphs(8).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(ours, theirs);
}

#[test]
fn external_fixture_reencodes_byte_for_byte() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    for line in text.lines().map(|l| l.strip_prefix(graph6::HEADER).unwrap_or(l)) {
        assert_eq!(graph6::encode(&graph6::decode(line).unwrap()), line);
    }
}

#[test]
fn graph6_random_round_trip() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=30);
        let p = rng.gen::<f64>();
        let g = common::random_graph(&mut rng, n, p);
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}
