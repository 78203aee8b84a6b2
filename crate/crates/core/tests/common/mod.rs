#![allow(dead_code)]

use rand::Rng;
use sqenergy::{Graph, SymMatrix};

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap()
}

pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// `B Bᵀ` for a random `n × r` matrix `B`, entries in `[-scale, scale]`.
pub fn random_psd(rng: &mut impl Rng, n: usize, r: usize, scale: f64) -> SymMatrix {
    let b: Vec<Vec<f64>> = (0..n).map(|_| (0..r).map(|_| rng.gen_range(-scale..=scale)).collect()).collect();
    SymMatrix::from_fn(n, |i, j| (0..r).map(|k| b[i][k] * b[j][k]).sum())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn relabel(g: &Graph, p: &[usize]) -> Graph {
    Graph::from_fn(g.n(), |a, b| g.has_edge(p[a], p[b])).unwrap()
}

/// Base of order 1..=5, up to one attachment per base vertex, attachments of
/// order 1..=4 with glued order at most 12, shifts either default or pushed past it by up to 1.
pub fn random_gluing(rng: &mut impl Rng) -> sqenergy::gluing::GluingSpec {
    use sqenergy::gluing::{glue, Attachment, GluingSpec};
    use rand::seq::SliceRandom;
    let n0 = rng.gen_range(1..=5);
    let p = rng.gen_range(0.2..0.9);
    let base = random_graph(rng, n0, p);
    let k = rng.gen_range(1..=n0);
    let mut points: Vec<usize> = (0..n0).collect();
    points.shuffle(rng);
    points.truncate(k);
    let mut budget = 12 - n0;
    let attachments: Vec<Attachment> = (0..k)
        .map(|_| {
            let n = rng.gen_range(1..=4.min(budget + 1));
            budget -= n - 1;
            let p = rng.gen_range(0.3..1.0);
            let g = random_graph(rng, n, p);
            Attachment::new(g, rng.gen_range(0..n))
        })
        .collect();
    let mut spec = GluingSpec {
        base,
        glue_points: points,
        attachments,
    };
    if rng.gen_bool(0.5) {
        let defaults = glue(&spec).expect("default shifts are valid").default_shifts;
        for (a, d) in spec.attachments.iter_mut().zip(defaults) {
            a.shift = Some(d + rng.gen_range(0.0..1.0));
        }
    }
    spec
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Unlabeled graphs on `n` vertices via the cycle index of `S_n` on pairs.
pub fn burnside_all(n: usize) -> u128 {
    let fact: u128 = (1..=n as u128).product();
    let mut total = 0u128;
    for cycles in partitions(n, n) {
        let mut class = fact;
        let mut mult = std::collections::HashMap::new();
        for &k in &cycles {
            class /= k as u128;
            *mult.entry(k).or_insert(0u128) += 1;
        }
        for m in mult.values() {
            class /= (1..=*m).product::<u128>();
        }
        let mut orbits = 0u32;
        for (i, &a) in cycles.iter().enumerate() {
            orbits += (a / 2) as u32;
            for &b in &cycles[i + 1..] {
                orbits += gcd(a, b) as u32;
            }
        }
        total += class << orbits;
    }
    total / fact
}

/// Connected counts from total counts by the inverse Euler transform.
pub fn burnside_connected(max_n: usize) -> Vec<i128> {
    let a: Vec<i128> = (0..=max_n).map(|n| if n == 0 { 1 } else { burnside_all(n) as i128 }).collect();
    let mut b = vec![0i128; max_n + 1];
    let mut c = vec![0i128; max_n + 1];
    for n in 1..=max_n {
        b[n] = n as i128 * a[n] - (1..n).map(|k| b[k] * a[n - k]).sum::<i128>();
        let lower: i128 = (1..n).filter(|d| n % d == 0).map(|d| d as i128 * c[d]).sum();
        c[n] = (b[n] - lower) / n as i128;
    }
    c
}

