//! Randomized spectral and gluing inequalities.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use sqenergy::gluing::{glue, Attachment, GluingSpec};
use sqenergy::invariants::matching_number;
use sqenergy::spectral::{eig_sym, graph_energies, graph_split, split};
use sqenergy::{canon, graph6, Graph, SymMatrix};

const TOL: f64 = 1e-8;

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut adj = vec![vec![false; n]; n];
            for b in 1..n {
                for a in 0..b {
                    adj[a][b] = it.next().unwrap();
                }
            }
            Graph::from_fn(n, |u, v| adj[u.min(v)][u.max(v)]).unwrap()
        })
    })
}

fn sym_strategy(max: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-5.0f64..5.0, n * n).prop_map(move |v| SymMatrix::from_fn(n, |i, j| v[i.min(j) * n + i.max(j)]))
    })
}

fn rng(seed: u64) -> rand::rngs::StdRng {
    rand::rngs::StdRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigendecomposition_reconstructs(a in sym_strategy(12)) {
        let e = eig_sym(&a).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        let back = e.spectral_sum(Some);
        prop_assert!(back.sub(&a).unwrap().frobenius_sq().sqrt() <= 1e-9 * (1.0 + a.frobenius_sq().sqrt()));
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                let dot: f64 = e.vector(i).iter().zip(e.vector(j)).map(|(x, y)| x * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn split_is_orthogonal_psd_pair(a in sym_strategy(10)) {
        let s = split(&a).unwrap();
        prop_assert!(s.a_plus.sub(&s.a_minus).unwrap().sub(&a).unwrap().frobenius_sq().sqrt() <= 1e-8 * (1.0 + a.frobenius_sq().sqrt()));
        prop_assert!(s.a_plus.inner(&s.a_minus).unwrap().abs() <= 1e-8 * (1.0 + a.frobenius_sq()));
        prop_assert!((s.a_plus.frobenius_sq() - s.s_plus()).abs() <= 1e-8 * (1.0 + s.s_plus()));
    }

    #[test]
    fn induced_subgraphs_interlace(g in graph_strategy(2, 10), keep in prop::collection::vec(any::<bool>(), 10)) {
        let n = g.n();
        let kept: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        prop_assume!(!kept.is_empty());
        let m = kept.len();
        let lam = graph_energies(&g).unwrap().eigenvalues;
        let theta = graph_energies(&g.induced_subgraph(&kept).unwrap()).unwrap().eigenvalues;
        for i in 0..m {
            prop_assert!(theta[i] <= lam[i] + TOL);
            prop_assert!(theta[i] >= lam[i + n - m] - TOL);
        }
    }

    #[test]
    fn square_energies_are_super_additive(g in graph_strategy(1, 10), parts in prop::collection::vec(0usize..3, 10)) {
        let e = graph_energies(&g).unwrap();
        let (mut sp, mut sm) = (0.0, 0.0);
        for p in 0..3 {
            let block: Vec<usize> = (0..g.n()).filter(|&v| parts[v] == p).collect();
            if block.is_empty() {
                continue;
            }
            let f = graph_energies(&g.induced_subgraph(&block).unwrap()).unwrap();
            sp += f.s_plus;
            sm += f.s_minus;
        }
        prop_assert!(e.s_plus >= sp - TOL);
        prop_assert!(e.s_minus >= sm - TOL);
    }

    #[test]
    fn p_energies_shrink_on_induced_subgraphs(g in graph_strategy(2, 10), drop in 0usize..10, p in 1.0f64..4.0) {
        let v = drop % g.n();
        let h = g.delete_vertex(v).unwrap();
        let (eg, eh) = (graph_energies(&g).unwrap(), graph_energies(&h).unwrap());
        for sign in [sqenergy::Sign::Plus, sqenergy::Sign::Minus] {
            prop_assert!(eh.p_energy(p, sign) <= eg.p_energy(p, sign) + 1e-7);
        }
    }

    #[test]
    fn pythagorean_lower_bound(g in graph_strategy(1, 9), seed in any::<u64>(), r in 1usize..4) {
        let mut rng = rng(seed);
        let s = graph_split(&g).unwrap();
        let m = common::random_psd(&mut rng, g.n(), r, 1.0);
        let lhs = g.adjacency_matrix().add(&m).unwrap().frobenius_sq();
        let rhs = s.s_plus() + s.a_minus.sub(&m).unwrap().frobenius_sq();
        prop_assert!(lhs >= rhs - 1e-8 * (1.0 + lhs));
    }

    #[test]
    fn top_two_sum_is_a_maximum(g in graph_strategy(2, 10), x in prop::collection::vec(-1.0f64..1.0, 10), y in prop::collection::vec(-1.0f64..1.0, 10)) {
        let n = g.n();
        let a = g.adjacency_matrix();
        let norm = |v: &[f64]| v.iter().map(|t| t * t).sum::<f64>().sqrt();
        let x: Vec<f64> = x[..n].to_vec();
        prop_assume!(norm(&x) > 1e-3);
        let x: Vec<f64> = x.iter().map(|t| t / norm(&x)).collect();
        let dot: f64 = x.iter().zip(&y[..n]).map(|(a, b)| a * b).sum();
        let y: Vec<f64> = y[..n].iter().zip(&x).map(|(b, a)| b - dot * a).collect();
        prop_assume!(norm(&y) > 1e-3);
        let y: Vec<f64> = y.iter().map(|t| t / norm(&y)).collect();
        let e = eig_sym(&a).unwrap();
        let top = e.values[0] + e.values[1];
        prop_assert!(a.quadratic_form(&x) + a.quadratic_form(&y) <= top + TOL);
        prop_assert!((a.quadratic_form(e.vector(0)) + a.quadratic_form(e.vector(1)) - top).abs() <= TOL);
    }

    #[test]
    fn twins_preserve_inertia(g in graph_strategy(1, 9), v in 0usize..9) {
        let v = v % g.n();
        let n = g.n();
        let h = Graph::from_fn(n + 1, |a, b| {
            let a = if a == n { v } else { a };
            if b == n { a != v && g.has_edge(a, v) } else { g.has_edge(a, b) }
        }).unwrap();
        prop_assert!(h.same_neighborhood(v, n));
        prop_assert_eq!(graph_energies(&g).unwrap().inertia.positive, graph_energies(&h).unwrap().inertia.positive);
        prop_assert_eq!(graph_energies(&g).unwrap().inertia.negative, graph_energies(&h).unwrap().inertia.negative);
    }

    #[test]
    fn tree_rank_is_twice_matching(n in 2usize..14, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = rng(seed);
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let t = Graph::from_edges(n, &edges).unwrap();
        let i = graph_energies(&t).unwrap().inertia;
        prop_assert_eq!(i.positive + i.negative, 2 * matching_number(&t));
        prop_assert_eq!(i.positive, i.negative);
    }

    #[test]
    fn gluing_bound_is_sound(seed in any::<u64>()) {
        let spec = common::random_gluing(&mut rng(seed));
        let b = glue(&spec).unwrap().bound().unwrap();
        prop_assert!(b.margin >= -1e-7 * (1.0 + b.bound));
    }

    #[test]
    fn larger_shifts_weaken_the_bound(seed in any::<u64>(), extra in 0.0f64..2.0) {
        let spec = common::random_gluing(&mut rng(seed));
        let glued = glue(&spec).unwrap();
        let before = glued.bound().unwrap();
        let pushed = GluingSpec {
            attachments: spec
                .attachments
                .iter()
                .zip(&glued.shifts)
                .map(|(a, s)| Attachment::new(a.graph.clone(), a.vertex).with_shift(s + extra))
                .collect(),
            ..spec.clone()
        };
        let after = glue(&pushed).unwrap().bound().unwrap();
        prop_assert!(after.bound <= before.bound + TOL);
        prop_assert!(after.margin >= -1e-7 * (1.0 + after.bound));
    }

    #[test]
    fn strengthened_gluing_inequality(seed in any::<u64>(), r in 1usize..4, scale in 0.1f64..1.5) {
        let mut rng = rng(seed);
        let spec = common::random_gluing(&mut rng);
        let glued = glue(&spec).unwrap();
        let b = glued.bound().unwrap();
        let m = common::random_psd(&mut rng, glued.graph.n(), r, scale);
        let (r1, r2) = glued.r_terms(&m).unwrap();
        let lhs = glued.graph.adjacency_matrix().add(&m).unwrap().frobenius_sq();
        prop_assert!(lhs >= b.bound + r1 + r2 - 1e-7 * (1.0 + lhs));
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(1, 12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut p: Vec<usize> = (0..g.n()).collect();
        p.shuffle(&mut rng(seed));
        let h = common::relabel(&g, &p);
        prop_assert!(canon::are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canon::canonical(&g).unwrap().automorphism_count, canon::canonical(&h).unwrap().automorphism_count);
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(1, 40)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}
