//! Analytic spectra and `A⁻` entries for paths, cycles and joins, plus the
//! trigonometric facts behind them.
//!
//! Path vertices are `1..=ℓ` here (one-indexed) with eigenvectors
//! `v_{i,j} = √(2/(ℓ+1))·sin(πij/(ℓ+1))` for `λ_i = 2cos(πi/(ℓ+1))`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::eigenvalues_sym;

pub fn path_eigenvalue(l: usize, i: usize) -> f64 {
    2.0 * (PI * i as f64 / (l + 1) as f64).cos()
}

/// Unit eigenvector for `λ_i` of `P_ℓ`, entries in vertex order.
pub fn path_eigenvector(l: usize, i: usize) -> Vec<f64> {
    let c = (2.0 / (l + 1) as f64).sqrt();
    (1..=l)
        .map(|j| c * (PI * (i * j) as f64 / (l + 1) as f64).sin())
        .collect()
}

/// `(A⁻(P_ℓ))₁,₁` with `x = π/(2ℓ+2)`: `(cot x + cot 3x)/(2ℓ+2)` for odd `ℓ`,
/// `(csc x + csc 3x)/(2ℓ+2)` for even `ℓ`.
pub fn path_neg_endpoint(l: usize) -> Result<f64> {
    if l == 0 {
        return Err(Error::param("path_neg_endpoint", "ℓ must be ≥ 1"));
    }
    let d = (2 * l + 2) as f64;
    let x = PI / d;
    let v = if l % 2 == 1 {
        1.0 / x.tan() + 1.0 / (3.0 * x).tan()
    } else {
        1.0 / x.sin() + 1.0 / (3.0 * x).sin()
    };
    Ok(v / d)
}

/// `(A⁻(P_ℓ))_{j,j+2}` (one-indexed), as the four-term sum
/// `1/(2(ℓ+1)) Σ_θ s_θ sin((2K+1)θ/2)/sin(θ/2)`, `K = ⌊(ℓ+1)/2⌋`, over
/// `θ ∈ {1, 3, 2j+1, 2j+3}·π/(ℓ+1)` with signs `+, +, −, −`.
pub fn path_neg_offdiag(l: usize, j: usize) -> Result<f64> {
    if j < 1 || j + 2 > l {
        return Err(Error::param("path_neg_offdiag", format!("need 1 ≤ j ≤ ℓ−2, got ℓ={l}, j={j}")));
    }
    let k = l.div_ceil(2) as f64;
    let phi = PI / (l + 1) as f64;
    let term = |c: usize| {
        let theta = c as f64 * phi;
        ((2.0 * k + 1.0) * theta / 2.0).sin() / (theta / 2.0).sin()
    };
    let sum = term(1) + term(3) - term(2 * j + 1) - term(2 * j + 3);
    Ok(sum / (2 * (l + 1)) as f64)
}

/// The `j`-independent part of [`path_neg_offdiag`]: with `x = π/(2ℓ+2)`,
/// `(x/π)(1/sin x − 1/sin 3x)` for even `ℓ`, `(x/π)(cot x − cot 3x)` for odd.
pub fn path_neg_offdiag_main(l: usize) -> f64 {
    let x = PI / (2 * l + 2) as f64;
    let inner = if l.is_multiple_of(2) {
        1.0 / x.sin() - 1.0 / (3.0 * x).sin()
    } else {
        1.0 / x.tan() - 1.0 / (3.0 * x).tan()
    };
    x / PI * inner
}

/// Exact `(s⁺(C_n), s⁻(C_n))`.
pub fn cycle_square_energy(n: usize) -> Result<(f64, f64)> {
    if n < 3 {
        return Err(Error::param("cycle_square_energy", "n must be ≥ 3"));
    }
    let nf = n as f64;
    let sec = 1.0 / (PI / nf).cos();
    Ok(match n % 4 {
        0 | 2 => (nf, nf),
        3 => (nf - 1.0 + sec, nf + 1.0 - sec),
        _ => (nf + 1.0 - sec, nf - 1.0 + sec),
    })
}

/// Spectrum of the join of an `r₁`-regular graph on `n₁` vertices with an
/// `r₂`-regular graph on `n₂` vertices, given each spectrum (nonincreasing,
/// leading eigenvalue `rᵢ`). Result is nonincreasing.
pub fn join_spectrum(r1: f64, n1: usize, spec1: &[f64], r2: f64, n2: usize, spec2: &[f64]) -> Result<Vec<f64>> {
    for (n, spec) in [(n1, spec1), (n2, spec2)] {
        if spec.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: spec.len(),
            });
        }
    }
    let disc = ((r1 - r2).powi(2) + 4.0 * (n1 * n2) as f64).sqrt();
    let mut out: Vec<f64> = spec1[1..].iter().chain(&spec2[1..]).copied().collect();
    out.push((r1 + r2 + disc) / 2.0);
    out.push((r1 + r2 - disc) / 2.0);
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

fn regular_degree(g: &Graph) -> Result<usize> {
    let d = g.degrees();
    let r = d[0];
    match d.iter().position(|&x| x != r) {
        None => Ok(r),
        Some(v) => Err(Error::NonRegular(format!(
            "vertex 0 has degree {r} but vertex {v} has degree {}",
            d[v]
        ))),
    }
}

/// [`join_spectrum`] for two regular graphs, spectra computed numerically.
pub fn join_spectrum_of(g1: &Graph, g2: &Graph) -> Result<Vec<f64>> {
    let r1 = regular_degree(g1)?;
    let r2 = regular_degree(g2)?;
    let s1 = eigenvalues_sym(&g1.adjacency_matrix())?;
    let s2 = eigenvalues_sym(&g2.adjacency_matrix())?;
    join_spectrum(r1 as f64, g1.n(), &s1, r2 as f64, g2.n(), &s2)
}

/// One grid-verified inequality.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridCheck {
    pub name: String,
    pub domain: (f64, f64),
    pub step: f64,
    pub points: usize,
    /// Smallest `rhs − lhs` seen (non-strict inequalities hold at ≥ −tol).
    pub min_margin: f64,
    pub argmin: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrigReport {
    pub checks: Vec<GridCheck>,
    /// Largest deviation between `Σ_{i≤k} cos(ix)` and
    /// `sin((2k+1)x/2)/(2sin(x/2)) − 1/2` over the sampled `x` and `k ≤ max_k`.
    pub cosine_sum_max_error: f64,
    pub cosine_sum_max_k: usize,
    pub cosine_sum_holds: bool,
    pub all_hold: bool,
}

const TRIG_TOL: f64 = 1e-12;

fn grid(name: &str, lo: f64, hi: f64, open: bool, step: f64, margin: impl Fn(f64) -> f64) -> GridCheck {
    let count = ((hi - lo) / step).round() as usize;
    let mut min_margin = f64::INFINITY;
    let mut argmin = lo;
    let mut points = 0;
    for i in 0..=count {
        if open && (i == 0 || i == count) {
            continue;
        }
        let x = if i == count { hi } else { lo + i as f64 * step };
        let m = margin(x);
        points += 1;
        if m < min_margin {
            min_margin = m;
            argmin = x;
        }
    }
    GridCheck {
        name: name.to_string(),
        domain: (lo, hi),
        step,
        points,
        min_margin,
        argmin,
        holds: min_margin >= -TRIG_TOL,
    }
}

pub fn cosine_partial_sum(k: usize, x: f64) -> f64 {
    ((2 * k + 1) as f64 * x / 2.0).sin() / (2.0 * (x / 2.0).sin()) - 0.5
}

/// Grid checks of `x − x³/6 ≤ sin x ≤ x` and `1 − x ≤ cos x ≤ 1` on `(0,1)`,
/// `|sin x| ≥ 2·dist(x/π, ℤ)` on `[0,π]`, and the cosine partial-sum identity
/// against direct summation.
pub fn trig_bounds_check(step: f64, max_k: usize) -> TrigReport {
    let dist = |y: f64| (y - y.round()).abs();
    let checks = vec![
        grid("sin x >= x - x^3/6", 0.0, 1.0, true, step, |x| x.sin() - (x - x.powi(3) / 6.0)),
        grid("sin x <= x", 0.0, 1.0, true, step, |x| x - x.sin()),
        grid("|sin x| >= 2 dist(x/pi)", 0.0, PI, false, step, |x| x.sin().abs() - 2.0 * dist(x / PI)),
        grid("cos x >= 1 - x", 0.0, 1.0, true, step, |x| x.cos() - (1.0 - x)),
        grid("cos x <= 1", 0.0, 1.0, true, step, |x| 1.0 - x.cos()),
    ];

    let samples = 200;
    let mut worst: f64 = 0.0;
    for s in 0..samples {
        let x = 0.05 + (2.0 * PI - 0.1) * s as f64 / (samples - 1) as f64;
        let mut direct = 0.0;
        for k in 1..=max_k {
            direct += (k as f64 * x).cos();
            worst = worst.max((direct - cosine_partial_sum(k, x)).abs());
        }
    }
    let cosine_sum_holds = worst <= 1e-9;
    let all_hold = cosine_sum_holds && checks.iter().all(|c| c.holds);
    TrigReport {
        checks,
        cosine_sum_max_error: worst,
        cosine_sum_max_k: max_k,
        cosine_sum_holds,
        all_hold,
    }
}

/// Where the endpoint entry settles below a threshold.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EndpointCrossover {
    pub threshold: f64,
    pub max_l: usize,
    /// Smallest `ℓ₀` with `(A⁻(P_ℓ))₁,₁ ≤ threshold` for every `ℓ ∈ [ℓ₀, max_l]`.
    pub settles_at: Option<usize>,
    /// Every `ℓ ≤ max_l` whose entry exceeds the threshold.
    pub above: Vec<usize>,
    pub max_value: f64,
}

pub fn endpoint_crossover(threshold: f64, max_l: usize) -> EndpointCrossover {
    let values: Vec<f64> = (1..=max_l).map(|l| path_neg_endpoint(l).expect("ℓ ≥ 1")).collect();
    let above: Vec<usize> = (1..=max_l).filter(|&l| values[l - 1] > threshold).collect();
    let settles_at = match above.last() {
        None => Some(1),
        Some(&l) if l < max_l => Some(l + 1),
        Some(_) => None,
    };
    EndpointCrossover {
        threshold,
        max_l,
        settles_at,
        above,
        max_value: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::spectral::{graph_energies, graph_split};

    fn a_minus_entry(l: usize, r: usize, c: usize) -> f64 {
        let s = graph_split(&FamilySpec::Path(l).build().unwrap()).unwrap();
        s.a_minus.get(r - 1, c - 1)
    }

    #[test]
    fn endpoint_small_cases() {
        assert!((path_neg_endpoint(2).unwrap() - 0.5).abs() < 1e-15);
        assert!(path_neg_endpoint(1).unwrap().abs() < 1e-15);
        assert!(path_neg_endpoint(10).unwrap() <= 0.43);
        assert!(path_neg_endpoint(0).is_err());
        for l in [1, 2, 3, 7, 10, 33] {
            assert!((path_neg_endpoint(l).unwrap() - a_minus_entry(l, 1, 1)).abs() < 1e-10);
        }
    }

    #[test]
    fn offdiag_matches_numeric() {
        for (l, j) in [(3, 1), (10, 4), (11, 1), (11, 9), (40, 19)] {
            let f = path_neg_offdiag(l, j).unwrap();
            assert!((f - a_minus_entry(l, j, j + 2)).abs() < 1e-10, "ℓ={l} j={j}");
        }
        assert!(path_neg_offdiag(5, 4).is_err());
        assert!(path_neg_offdiag(5, 0).is_err());
    }

    #[test]
    fn offdiag_large_paths() {
        assert!(path_neg_offdiag(200, 100).unwrap() >= 0.21);
        assert!(path_neg_offdiag(500, 250).unwrap() >= 0.21);
        for l in [200, 201] {
            let main = path_neg_offdiag_main(l);
            assert!(main >= 0.211);
            for j in 100..=l - 100 {
                assert!((path_neg_offdiag(l, j).unwrap() - main).abs() < 1e-4);
            }
        }
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_square_energy(4).unwrap(), (4.0, 4.0));
        let (p7, m7) = cycle_square_energy(7).unwrap();
        assert!((p7 - 7.1099).abs() < 1e-4 && (m7 - 6.8901).abs() < 1e-4);
        let (p5, _) = cycle_square_energy(5).unwrap();
        assert!((p5 - 4.7639).abs() < 1e-4);
        for n in 3..40 {
            let e = graph_energies(&FamilySpec::Cycle(n).build().unwrap()).unwrap();
            let (p, m) = cycle_square_energy(n).unwrap();
            assert!((e.s_plus - p).abs() < 1e-9 && (e.s_minus - m).abs() < 1e-9, "C_{n}");
        }
        assert!(cycle_square_energy(2).is_err());
    }

    fn numeric(g: &Graph) -> Vec<f64> {
        eigenvalues_sym(&g.adjacency_matrix()).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn joins() {
        let k1 = FamilySpec::Complete(1).build().unwrap();
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        let wheel = Graph::join(&k1, &c4).unwrap();
        let j = join_spectrum_of(&k1, &c4).unwrap();
        assert!(close(&j, &numeric(&wheel)));
        assert!((j[0] - (2.0 + 20f64.sqrt()) / 2.0).abs() < 1e-12);

        let k3 = FamilySpec::Complete(3).build().unwrap();
        let k4 = FamilySpec::Complete(4).build().unwrap();
        let k7 = FamilySpec::Complete(7).build().unwrap();
        assert!(close(&join_spectrum_of(&k3, &k4).unwrap(), &numeric(&k7)));

        let p3 = FamilySpec::Path(3).build().unwrap();
        assert!(matches!(join_spectrum_of(&p3, &k1), Err(Error::NonRegular(_))));
    }

    #[test]
    fn planar_join_top_eigenvalue() {
        for n in [6usize, 10, 30] {
            let g: FamilySpec = format!("join(cycle({}),empty(2))", n - 2).parse().unwrap();
            let top = numeric(&g.build().unwrap())[0];
            assert!((top - (1.0 + ((2 * n - 3) as f64).sqrt())).abs() < 1e-9);
            assert!((top - (1.0 + ((2 * n - 1) as f64).sqrt())).abs() > 0.1);
        }
    }

    #[test]
    fn trig_facts() {
        let r = trig_bounds_check(1e-4, 1000);
        assert!(r.all_hold, "{r:?}");
        assert!((cosine_partial_sum(3, 0.7) - (0.7f64.cos() + 1.4f64.cos() + 2.1f64.cos())).abs() < 1e-12);
        let x: f64 = 0.5;
        assert!(x - x.powi(3) / 6.0 <= x.sin() && x.sin() <= x);
        assert!(((PI / 2.0).sin() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenvectors_are_unit() {
        for (l, i) in [(5, 1), (8, 3)] {
            let v = path_eigenvector(l, i);
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            let a = FamilySpec::Path(l).build().unwrap().adjacency_matrix();
            for r in 0..l {
                let av: f64 = (0..l).map(|c| a.get(r, c) * v[c]).sum();
                assert!((av - path_eigenvalue(l, i) * v[r]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn crossover_report() {
        let c = endpoint_crossover(0.43, 600);
        assert!(c.max_value <= 0.5 + 1e-15);
        assert!(c.settles_at.unwrap() <= 10);
    }
}
