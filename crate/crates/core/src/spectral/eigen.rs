//! Dense symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by implicit-shift QL iteration (the EISPACK `tred2`/`tql2` pair).
//!
//! Working storage is column-major so that every inner loop of both phases
//! walks contiguous memory.

use super::SymMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Eigenvalues in nonincreasing order with matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    dim: usize,
    /// Column `i` (contiguous) is the unit eigenvector for `values[i]`.
    vectors: Vec<f64>,
}

impl Eigen {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i * self.dim..(i + 1) * self.dim]
    }

    /// `Σ_k weight(λ_k)·v_k v_kᵀ` for the eigenpairs selected by `weight`.
    pub fn spectral_sum(&self, mut weight: impl FnMut(f64) -> Option<f64>) -> SymMatrix {
        let n = self.dim;
        let mut out = SymMatrix::zeros(n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let Some(w) = weight(lambda) else { continue };
            let v = self.vector(k);
            for i in 0..n {
                let wi = w * v[i];
                for j in 0..=i {
                    out.add_at(i, j, wi * v[j]);
                }
            }
        }
        out
    }
}

/// Full eigendecomposition of a symmetric matrix.
pub fn eig_sym(a: &SymMatrix) -> Result<Eigen> {
    let n = a.dim();
    let (d, w) = solve(a, true)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| d[y].total_cmp(&d[x]));
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        vectors.extend_from_slice(&w[k * n..(k + 1) * n]);
    }
    Ok(Eigen {
        values: order.iter().map(|&k| d[k]).collect(),
        dim: n,
        vectors,
    })
}

/// Eigenvalues only, nonincreasing. Skips all eigenvector accumulation.
pub fn eigenvalues_sym(a: &SymMatrix) -> Result<Vec<f64>> {
    let (mut d, _) = solve(a, false)?;
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

fn solve(a: &SymMatrix, vectors: bool) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = a.dim();
    // w[c * n + r] holds V[r][c].
    let mut w = vec![0.0; n * n];
    for r in 0..n {
        for c in 0..n {
            w[c * n + r] = a.get(r, c);
        }
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 1 {
        d[0] = w[0];
        w[0] = 1.0;
        return Ok((d, w));
    }
    tridiagonalize(n, &mut w, &mut d, &mut e, vectors);
    ql_implicit(n, &mut w, &mut d, &mut e, vectors)?;
    Ok((d, w))
}

fn tridiagonalize(n: usize, w: &mut [f64], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    let at = |r: usize, c: usize| c * n + r;

    for j in 0..n {
        d[j] = w[at(n - 1, j)];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = w[at(i - 1, j)];
                w[at(i, j)] = 0.0;
                w[at(j, i)] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }

            for j in 0..i {
                f = d[j];
                w[at(j, i)] = f;
                g = e[j] + w[at(j, j)] * f;
                let col = &w[j * n..j * n + i];
                for k in j + 1..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                let col = &mut w[j * n..j * n + i];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = w[at(i - 1, j)];
                w[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for j in 0..n {
            d[j] = w[at(j, j)];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        w[at(n - 1, i)] = w[at(i, i)];
        w[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = w[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += w[at(k, i + 1)] * w[at(k, j)];
                }
                for k in 0..=i {
                    w[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            w[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = w[at(n - 1, j)];
        w[at(n - 1, j)] = 0.0;
    }
    w[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

fn ql_implicit(n: usize, w: &mut [f64], d: &mut [f64], e: &mut [f64], vectors: bool) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_SWEEPS_PER_EIGENVALUE {
                    return Err(Error::NoConvergence { iterations: iter });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if vectors {
                        let (lo, hi) = w.split_at_mut((i + 1) * n);
                        let vi = &mut lo[i * n..];
                        let vi1 = &mut hi[..n];
                        for k in 0..n {
                            let t = vi1[k];
                            vi1[k] = s * vi[k] + c * t;
                            vi[k] = c * vi[k] - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
