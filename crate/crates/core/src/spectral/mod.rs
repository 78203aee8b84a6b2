//! Symmetric matrices, eigen-decomposition, sign classification and the
//! square/p-energies built on top of it.

mod eigen;
mod variational;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use eigen::{eig_sym, eigenvalues_sym, Eigen};
pub use variational::{variational_splus, Variational, VariationalOptions};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Environment variable that overrides the relative zero threshold.
pub const EIG_TOL_ENV: &str = "SQENERGY_EIG_TOL";

/// Default relative zero threshold: an eigenvalue counts as zero when
/// `|λ| ≤ factor · max(1, |λ|_max)`.
pub const DEFAULT_ZERO_TOL_FACTOR: f64 = 1e-9;

/// Relative zero threshold in effect for this process.
///
/// Reads [`EIG_TOL_ENV`] once; unparsable or non-positive values fall back to
/// [`DEFAULT_ZERO_TOL_FACTOR`].
pub fn zero_tol_factor() -> f64 {
    static FACTOR: OnceLock<f64> = OnceLock::new();
    *FACTOR.get_or_init(|| {
        std::env::var(EIG_TOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
            .unwrap_or(DEFAULT_ZERO_TOL_FACTOR)
    })
}

/// Dense real symmetric matrix. Only the lower triangle is stored, so the
/// matrix is symmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

#[inline]
fn packed(i: usize, j: usize) -> usize {
    let (r, c) = if i >= j { (i, j) } else { (j, i) };
    r * (r + 1) / 2 + c
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> SymMatrix {
        SymMatrix {
            dim,
            data: vec![0.0; dim * (dim + 1) / 2],
        }
    }

    pub fn identity(dim: usize) -> SymMatrix {
        SymMatrix::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Fills the matrix from `f(i, j)` evaluated on the lower triangle `j ≤ i`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> SymMatrix {
        let mut data = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in 0..=i {
                data.push(f(i, j));
            }
        }
        SymMatrix { dim, data }
    }

    /// Builds from full rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let dim = rows.len();
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.len(),
                });
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[packed(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[packed(i, j)] = value;
    }

    #[inline]
    pub(crate) fn add_at(&mut self, i: usize, j: usize, value: f64) {
        self.data[packed(i, j)] += value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `⟨A, B⟩ = tr(AB)`.
    pub fn inner(&self, other: &SymMatrix) -> Result<f64> {
        self.check_dim(other)?;
        let mut s = 0.0;
        for i in 0..self.dim {
            for j in 0..=i {
                let p = self.get(i, j) * other.get(i, j);
                s += if i == j { p } else { 2.0 * p };
            }
        }
        Ok(s)
    }

    /// Squared Frobenius norm, `tr(A²)`.
    pub fn frobenius_sq(&self) -> f64 {
        self.inner(self).expect("same dimension")
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    fn zip(&self, other: &SymMatrix, f: impl Fn(f64, f64) -> f64) -> Result<SymMatrix> {
        self.check_dim(other)?;
        Ok(SymMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    fn check_dim(&self, other: &SymMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    /// Row-major dense product `self · other` (generally not symmetric).
    pub fn product(&self, other: &SymMatrix) -> Result<Vec<f64>> {
        self.check_dim(other)?;
        let n = self.dim;
        let a = self.rows();
        let b = other.rows();
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i][k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * b[k][j];
                }
            }
        }
        Ok(out)
    }

    /// `xᵀ A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.dim {
            s += self.get(i, i) * x[i] * x[i];
            for j in 0..i {
                s += 2.0 * self.get(i, j) * x[i] * x[j];
            }
        }
        s
    }

    /// Principal submatrix on `indices` (in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    /// Projection onto the PSD cone: negative eigenvalues clamped to zero.
    pub fn psd_projection(&self) -> Result<SymMatrix> {
        Ok(eig_sym(self)?.spectral_sum(|l| (l > 0.0).then_some(l)))
    }
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

/// Which side of the spectrum an energy sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Eigenvalue-only summary: spectrum, threshold, inertia and square energies.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Energies {
    /// Nonincreasing.
    pub eigenvalues: Vec<f64>,
    pub zero_tol: f64,
    pub inertia: Inertia,
    pub s_plus: f64,
    pub s_minus: f64,
}

impl Energies {
    pub fn from_eigenvalues(eigenvalues: Vec<f64>, factor: f64) -> Energies {
        let max_abs = eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let zero_tol = factor * max_abs.max(1.0);
        let mut inertia = Inertia {
            positive: 0,
            zero: 0,
            negative: 0,
        };
        let (mut s_plus, mut s_minus) = (0.0, 0.0);
        for &l in &eigenvalues {
            if l > zero_tol {
                inertia.positive += 1;
                s_plus += l * l;
            } else if l < -zero_tol {
                inertia.negative += 1;
                s_minus += l * l;
            } else {
                inertia.zero += 1;
            }
        }
        Energies {
            eigenvalues,
            zero_tol,
            inertia,
            s_plus,
            s_minus,
        }
    }

    pub fn square(&self, sign: Sign) -> f64 {
        match sign {
            Sign::Plus => self.s_plus,
            Sign::Minus => self.s_minus,
        }
    }

    /// `Σ |λ|^p` over the chosen sign class.
    pub fn p_energy(&self, p: f64, sign: Sign) -> f64 {
        self.eigenvalues
            .iter()
            .filter(|&&l| match sign {
                Sign::Plus => l > self.zero_tol,
                Sign::Minus => l < -self.zero_tol,
            })
            .map(|l| l.abs().powf(p))
            .sum()
    }

    pub fn lambda(&self, i: usize) -> f64 {
        self.eigenvalues[i]
    }
}

/// Square energies of an arbitrary symmetric matrix under the process
/// threshold.
pub fn energies(a: &SymMatrix) -> Result<Energies> {
    energies_with(a, zero_tol_factor())
}

pub fn energies_with(a: &SymMatrix, factor: f64) -> Result<Energies> {
    Ok(Energies::from_eigenvalues(eigenvalues_sym(a)?, factor))
}

/// Square energies of a graph's adjacency matrix.
pub fn graph_energies(g: &Graph) -> Result<Energies> {
    energies(&g.adjacency_matrix())
}

/// `s⁺` or `s⁻` of a graph.
pub fn square_energy(g: &Graph, sign: Sign) -> Result<f64> {
    Ok(graph_energies(g)?.square(sign))
}

/// Positive or negative p-energy of a graph, `p ≥ 0`.
pub fn p_energy(g: &Graph, p: f64, sign: Sign) -> Result<f64> {
    if !(p >= 0.0) {
        return Err(Error::param("p_energy", format!("p must be nonnegative, got {p}")));
    }
    Ok(graph_energies(g)?.p_energy(p, sign))
}

/// Full spectral split `A = A⁺ − A⁻` with energies and inertia.
#[derive(Clone, Debug)]
pub struct SpectralSplit {
    pub energies: Energies,
    pub a_plus: SymMatrix,
    pub a_minus: SymMatrix,
}

impl SpectralSplit {
    pub fn s_plus(&self) -> f64 {
        self.energies.s_plus
    }

    pub fn s_minus(&self) -> f64 {
        self.energies.s_minus
    }

    pub fn inertia(&self) -> Inertia {
        self.energies.inertia
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.energies.eigenvalues
    }
}

pub fn split(a: &SymMatrix) -> Result<SpectralSplit> {
    split_with(a, zero_tol_factor())
}

pub fn split_with(a: &SymMatrix, factor: f64) -> Result<SpectralSplit> {
    let eig = eig_sym(a)?;
    let energies = Energies::from_eigenvalues(eig.values.clone(), factor);
    let tol = energies.zero_tol;
    let a_plus = eig.spectral_sum(|l| (l > tol).then_some(l));
    let a_minus = eig.spectral_sum(|l| (l < -tol).then_some(-l));
    Ok(SpectralSplit {
        energies,
        a_plus,
        a_minus,
    })
}

pub fn graph_split(g: &Graph) -> Result<SpectralSplit> {
    split(&g.adjacency_matrix())
}
