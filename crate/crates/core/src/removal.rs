//! Induced-P₃ vertex removal and the bounds built on it.
//!
//! Every induced P₃ has a vertex whose deletion lowers `s⁺` (and, possibly a
//! different one, `s⁻`) by at least `1 + ε` with `ε = 1/16`. Stripping
//! P₃'s until only disjoint cliques remain telescopes into
//! `s(G) ≥ s(residual) + (1 + ε)·k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::invariants::{clique_number, first_induced_p3, independence_number, induced_p3s};
use crate::spectral::{graph_energies, square_energy, Sign};

pub const EPSILON: f64 = 1.0 / 16.0;
/// `ε / (1 + ε)`.
pub const CLIQUE_INDEPENDENCE_C: f64 = 1.0 / 17.0;
const SLACK: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RemovalStep {
    /// Vertex id in the input graph.
    pub removed: usize,
    /// The induced P₃ `[a, center, c]`, input ids.
    pub p3: [usize; 3],
    pub order_before: usize,
    pub order_after: usize,
    pub energy_before: f64,
    pub energy_after: f64,
    pub drop: f64,
    /// `drop ≥ 1 + ε − 1e−7`.
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RemovalTrace {
    pub n: usize,
    pub sign: Sign,
    pub epsilon: f64,
    pub steps: Vec<RemovalStep>,
    /// Residual clique vertex sets (input ids), ordered by size then content.
    pub residual: Vec<Vec<usize>>,
    /// Sizes of `residual`, nondecreasing.
    pub residual_cliques: Vec<usize>,
    pub k: usize,
}

impl RemovalTrace {
    pub fn all_valid(&self) -> bool {
        self.steps.iter().all(|s| s.valid)
    }

    pub fn min_drop(&self) -> Option<f64> {
        self.steps.iter().map(|s| s.drop).reduce(f64::min)
    }
}

/// Removes, one P₃ at a time, the vertex of the lexicographically first
/// induced P₃ with the largest energy drop (ties to the smallest id).
pub fn p3_strip(g: &Graph, sign: Sign) -> Result<RemovalTrace> {
    let mut ids: Vec<usize> = (0..g.n()).collect();
    let mut cur = g.clone();
    let mut energy = if g.n() == 0 { 0.0 } else { square_energy(g, sign)? };
    let mut steps = Vec::new();
    while let Some((b, a, c)) = first_induced_p3(&cur) {
        let mut best: Option<(usize, f64)> = None;
        for u in [a, b, c] {
            let after = square_energy(&cur.delete_vertex(u)?, sign)?;
            let better = match best {
                None => true,
                Some((bu, be)) => after < be || (after == be && ids[u] < ids[bu]),
            };
            if better {
                best = Some((u, after));
            }
        }
        let (u, after) = best.expect("three candidates");
        let drop = energy - after;
        steps.push(RemovalStep {
            removed: ids[u],
            p3: [ids[a], ids[b], ids[c]],
            order_before: cur.n(),
            order_after: cur.n() - 1,
            energy_before: energy,
            energy_after: after,
            drop,
            valid: drop >= 1.0 + EPSILON - SLACK,
        });
        cur = cur.delete_vertex(u)?;
        ids.remove(u);
        energy = after;
    }
    let mut residual: Vec<Vec<usize>> = cur
        .component_sets()
        .into_iter()
        .map(|c| c.into_iter().map(|v| ids[v]).collect())
        .collect();
    residual.sort_by(|x: &Vec<usize>, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(RemovalTrace {
        n: g.n(),
        sign,
        epsilon: EPSILON,
        k: steps.len(),
        residual_cliques: residual.iter().map(Vec::len).collect(),
        residual,
        steps,
    })
}

/// `s(K_c)`: `(c−1)²` for `s⁺`, `c−1` for `s⁻`.
pub fn clique_energy(c: usize, sign: Sign) -> f64 {
    let r = c.saturating_sub(1) as f64;
    match sign {
        Sign::Plus => r * r,
        Sign::Minus => r,
    }
}

/// `s(residual) + (1 + ε)·k`.
pub fn telescoped_bound(trace: &RemovalTrace) -> f64 {
    let residual: f64 = trace.residual_cliques.iter().map(|&c| clique_energy(c, trace.sign)).sum();
    residual + (1.0 + trace.epsilon) * trace.k as f64
}

/// Smallest value over all induced P₃'s of `max_{u ∈ P₃} (s(G) − s(G−u)) − (1+ε)`.
/// `None` if `g` has no induced P₃.
pub fn p3_lemma_margin(g: &Graph, sign: Sign) -> Result<Option<f64>> {
    if first_induced_p3(g).is_none() {
        return Ok(None);
    }
    let full = square_energy(g, sign)?;
    let drops: Vec<f64> = (0..g.n())
        .map(|v| Ok(full - square_energy(&g.delete_vertex(v)?, sign)?))
        .collect::<Result<_>>()?;
    Ok(induced_p3s(g)
        .map(|(b, a, c)| drops[a].max(drops[b]).max(drops[c]) - (1.0 + EPSILON))
        .reduce(f64::min))
}

/// `16x⁴ − 6(1 + ε − 4(1−x)²)(1 + ε − 2(1−x)²)`.
pub fn epsilon_margin(epsilon: f64, x: f64) -> f64 {
    let y = (1.0 - x) * (1.0 - x);
    16.0 * x.powi(4) - 6.0 * (1.0 + epsilon - 4.0 * y) * (1.0 + epsilon - 2.0 * y)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EpsilonReport {
    pub epsilon: f64,
    pub grid_step: f64,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub min_margin: f64,
    pub argmin: f64,
    pub holds: bool,
    /// First grid point with margin ≤ 0.
    pub witness: Option<f64>,
    /// Largest ε (to `search_resolution`) whose grid check passes.
    pub max_epsilon: f64,
    pub search_resolution: f64,
}

struct GridScan {
    points: usize,
    min_margin: f64,
    argmin: f64,
    witness: Option<f64>,
}

fn scan(epsilon: f64, step: f64) -> GridScan {
    let lo = (1.0 - epsilon) / 2.0;
    let hi = 1.0 + epsilon;
    let count = ((hi - lo) / step).floor() as usize;
    let mut out = GridScan {
        points: 0,
        min_margin: f64::INFINITY,
        argmin: lo,
        witness: None,
    };
    let xs = (0..=count).map(|i| lo + i as f64 * step).chain(std::iter::once(hi));
    for x in xs {
        let m = epsilon_margin(epsilon, x);
        out.points += 1;
        if m < out.min_margin {
            out.min_margin = m;
            out.argmin = x;
        }
        if m <= 0.0 && out.witness.is_none() {
            out.witness = Some(x);
        }
    }
    out
}

/// Grid check of the strict inequality over `x ∈ [(1−ε)/2, 1+ε]`, endpoints
/// included, plus a bisection for the largest passing ε in `(0, 1)`.
pub fn epsilon_inequality_check(epsilon: f64, grid_step: f64) -> Result<EpsilonReport> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::param("epsilon_inequality_check", format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    if !(grid_step > 0.0 && grid_step <= 1e-4) {
        return Err(Error::param("epsilon_inequality_check", format!("grid step must lie in (0, 1e-4], got {grid_step}")));
    }
    let s = scan(epsilon, grid_step);
    let resolution = 1e-4;
    let passes = |e: f64| scan(e, grid_step).witness.is_none();
    let (mut good, mut bad) = (0.0, 1.0);
    if passes(epsilon) {
        good = epsilon;
    } else {
        bad = epsilon;
    }
    while bad - good > resolution {
        let mid = 0.5 * (good + bad);
        if mid > 0.0 && passes(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Ok(EpsilonReport {
        epsilon,
        grid_step,
        lo: (1.0 - epsilon) / 2.0,
        hi: 1.0 + epsilon,
        points: s.points,
        min_margin: s.min_margin,
        argmin: s.argmin,
        holds: s.witness.is_none(),
        witness: s.witness,
        max_epsilon: good,
        search_resolution: resolution,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HamiltonianReport {
    pub n: usize,
    pub k: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `s⁻ ≥ n − 1`; asserted only for `k ≥ 16`.
    pub minus_target: f64,
    pub minus_holds: Option<bool>,
    /// `s⁺ ≥ 4n/3`; asserted only for `k ≥ 2`.
    pub plus_target: f64,
    pub plus_holds: Option<bool>,
}

impl HamiltonianReport {
    pub fn holds(&self) -> bool {
        self.minus_holds != Some(false) && self.plus_holds != Some(false)
    }
}

pub fn hamiltonian_power_check(n: usize, k: usize) -> Result<HamiltonianReport> {
    if k == 0 || n < 2 * k + 1 {
        return Err(Error::param("hamiltonian_power_check", format!("need k ≥ 1 and n ≥ 2k+1, got n = {n}, k = {k}")));
    }
    let e = graph_energies(&FamilySpec::CyclePower(n, k).build()?)?;
    let minus_target = n as f64 - 1.0;
    let plus_target = 4.0 * n as f64 / 3.0;
    Ok(HamiltonianReport {
        n,
        k,
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        minus_target,
        minus_holds: (k >= 16).then_some(e.s_minus >= minus_target - SLACK),
        plus_target,
        plus_holds: (k >= 2).then_some(e.s_plus >= plus_target - SLACK),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GapReport {
    pub n: usize,
    pub k: usize,
    pub cliques: usize,
    /// Lengths of runs of removed vertices between two different residual
    /// cliques, in cyclic order.
    pub gaps: Vec<usize>,
    pub min_gap: Option<usize>,
    pub holds: bool,
}

/// Strips `CyclePower(n, k)` for `s⁻` and measures the gaps between residual
/// cliques along the cycle order; each must be at least `k` long.
pub fn gap_structure_check(n: usize, k: usize) -> Result<GapReport> {
    if k == 0 || n < 2 * k + 1 {
        return Err(Error::param("gap_structure_check", format!("need k ≥ 1 and n ≥ 2k+1, got n = {n}, k = {k}")));
    }
    let trace = p3_strip(&FamilySpec::CyclePower(n, k).build()?, Sign::Minus)?;
    let mut owner = vec![None; n];
    for (i, c) in trace.residual.iter().enumerate() {
        for &v in c {
            owner[v] = Some(i);
        }
    }
    let gaps = cyclic_gaps(&owner);
    let min_gap = gaps.iter().copied().min();
    Ok(GapReport {
        n,
        k,
        cliques: trace.residual.len(),
        holds: min_gap.is_none_or(|g| g >= k),
        gaps,
        min_gap,
    })
}

fn cyclic_gaps(owner: &[Option<usize>]) -> Vec<usize> {
    let n = owner.len();
    let Some(start) = (0..n).find(|&i| owner[i].is_some()) else {
        return Vec::new();
    };
    let mut gaps = Vec::new();
    let mut prev = owner[start];
    let mut run = 0;
    for step in 1..=n {
        match owner[(start + step) % n] {
            None => run += 1,
            cur => {
                if run > 0 && cur != prev {
                    gaps.push(run);
                }
                run = 0;
                prev = cur;
            }
        }
    }
    gaps
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CliqueIndependenceVerdict {
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    /// `α·ω ≤ n/17`.
    pub hypothesis: bool,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `min(s⁺, s⁻) ≥ n`.
    pub conclusion: bool,
}

impl CliqueIndependenceVerdict {
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

pub fn clique_independence_check(g: &Graph) -> Result<CliqueIndependenceVerdict> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::param("clique_independence_check", "graph must be connected"));
    }
    let alpha = independence_number(g)?;
    let omega = clique_number(g)?;
    let e = graph_energies(g)?;
    let n = g.n();
    Ok(CliqueIndependenceVerdict {
        n,
        alpha,
        omega,
        hypothesis: (alpha * omega) as f64 <= CLIQUE_INDEPENDENCE_C * n as f64,
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        conclusion: e.s_plus.min(e.s_minus) >= n as f64 - SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec::*;

    fn b(s: FamilySpec) -> Graph {
        s.build().unwrap()
    }

    #[test]
    fn complete_graph_needs_no_steps() {
        let t = p3_strip(&b(Complete(5)), Sign::Minus).unwrap();
        assert_eq!(t.k, 0);
        assert_eq!(t.residual_cliques, vec![5]);
        assert_eq!(telescoped_bound(&t), 4.0);
    }

    #[test]
    fn path3_strips_center() {
        for sign in [Sign::Plus, Sign::Minus] {
            let t = p3_strip(&b(Path(3)), sign).unwrap();
            assert_eq!(t.k, 1);
            assert_eq!(t.steps[0].removed, 1);
            assert!((t.steps[0].drop - 2.0).abs() < 1e-9);
            assert_eq!(t.residual_cliques, vec![1, 1]);
            assert!(t.all_valid());
        }
    }

    #[test]
    fn traces_are_valid_and_sound() {
        let mut petersen = Vec::new();
        for i in 0..5 {
            petersen.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
        }
        let graphs = [
            b(Cycle(5)),
            b(Cycle(9)),
            Graph::from_edges(10, &petersen).unwrap(),
            b(TrianglePaths(2, 3, 1)),
            b(CyclePower(20, 3)),
        ];
        for g in &graphs {
            for sign in [Sign::Plus, Sign::Minus] {
                let t = p3_strip(g, sign).unwrap();
                assert!(t.all_valid(), "{t:?}");
                assert_eq!(t.k + t.residual_cliques.iter().sum::<usize>(), g.n());
                let s = square_energy(g, sign).unwrap();
                assert!(telescoped_bound(&t) <= s + 1e-7);
                for c in &t.residual {
                    for (i, &u) in c.iter().enumerate() {
                        assert!(c[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                    }
                }
                assert!(p3_lemma_margin(g, sign).unwrap().unwrap() >= -1e-7);
            }
        }
        assert_eq!(p3_lemma_margin(&b(Complete(4)), Sign::Plus).unwrap(), None);
    }

    #[test]
    fn epsilon_grid() {
        let r = epsilon_inequality_check(EPSILON, 1e-5).unwrap();
        assert!(r.holds && r.min_margin > 0.0, "{r:?}");
        assert!(r.max_epsilon >= EPSILON);
        assert!(epsilon_margin(EPSILON, (1.0 - EPSILON) / 2.0) > 0.0);
        assert!(epsilon_margin(1.0, 0.0) <= 0.0);
        let bad = epsilon_inequality_check(0.999, 1e-4).unwrap();
        assert!(!bad.holds && bad.witness.is_some());
        assert!(epsilon_inequality_check(1.0, 1e-5).is_err());
        assert!(epsilon_inequality_check(0.1, 1e-3).is_err());
    }

    #[test]
    fn hamiltonian_powers() {
        let r = hamiltonian_power_check(40, 16).unwrap();
        assert_eq!(r.minus_holds, Some(true));
        assert!(r.s_minus >= 39.0);
        let r = hamiltonian_power_check(9, 2).unwrap();
        assert_eq!(r.plus_holds, Some(true));
        assert_eq!(r.minus_holds, None);
        let r = hamiltonian_power_check(7, 3).unwrap();
        assert!((r.s_minus - 6.0).abs() < 1e-9);
        assert!(hamiltonian_power_check(6, 3).is_err());
    }

    #[test]
    fn gaps() {
        assert_eq!(cyclic_gaps(&[Some(0), None, None, Some(1), None, Some(1)]), vec![2]);
        assert_eq!(cyclic_gaps(&[Some(0), None, Some(1), None, None, None]), vec![1, 3]);
        assert!(cyclic_gaps(&[None, None]).is_empty());
        let r = gap_structure_check(40, 16).unwrap();
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn clique_independence() {
        let v = clique_independence_check(&b(Cycle(5))).unwrap();
        assert_eq!((v.alpha, v.omega), (2, 2));
        assert!(!v.hypothesis && v.consistent());
        let k333 = Graph::complement(&Graph::disjoint_union(&[b(Complete(3)), b(Complete(3)), b(Complete(3))]).unwrap());
        let v = clique_independence_check(&k333).unwrap();
        assert_eq!((v.alpha, v.omega, v.n), (3, 3, 9));
        assert!(!v.hypothesis);
        assert!(clique_independence_check(&b(Empty(2))).is_err());
    }
}
