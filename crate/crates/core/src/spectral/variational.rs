//! `s⁺(A) = min over PSD M of ‖A + M‖²_F`, solved by projected gradient.

use super::{split, SymMatrix};
use crate::error::Result;

#[derive(Clone, Copy, Debug)]
pub struct VariationalOptions {
    pub max_iters: usize,
    /// Stop once successive iterates differ by at most this in Frobenius norm.
    pub tol: f64,
}

impl Default for VariationalOptions {
    fn default() -> Self {
        VariationalOptions {
            max_iters: 500,
            tol: 1e-10,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Variational {
    /// `‖A + M‖²` at the returned witness.
    pub value: f64,
    pub witness: SymMatrix,
    pub iterations: usize,
    pub converged: bool,
    /// `‖A + A⁻‖²`, the objective at the exact minimizer.
    pub value_at_a_minus: f64,
    pub s_plus: f64,
}

/// Projected gradient from `M = 0` with step `1/(2L)`, `L = 2`:
/// `M ← P_psd(M − ½(A + M)) = P_psd((M − A)/2)`.
///
/// Hitting `max_iters` is not an error; the best iterate is returned with
/// `converged = false`.
pub fn variational_splus(a: &SymMatrix, opts: VariationalOptions) -> Result<Variational> {
    let reference = split(a)?;
    let objective = |m: &SymMatrix| a.add(m).map(|s| s.frobenius_sq());

    let mut m = SymMatrix::zeros(a.dim());
    let mut best = (objective(&m)?, m.clone());
    let mut converged = false;
    let mut iterations = 0;
    while iterations < opts.max_iters {
        iterations += 1;
        let next = m.sub(a)?.scale(0.5).psd_projection()?;
        let step = next.sub(&m)?.frobenius_sq().sqrt();
        m = next;
        let value = objective(&m)?;
        if value < best.0 {
            best = (value, m.clone());
        }
        if step <= opts.tol {
            converged = true;
            break;
        }
    }

    Ok(Variational {
        value: best.0,
        witness: best.1,
        iterations,
        converged,
        value_at_a_minus: objective(&reference.a_minus)?,
        s_plus: reference.s_plus(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_rank_one() {
        let a = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let v = variational_splus(&a, VariationalOptions::default()).unwrap();
        assert!(v.converged);
        assert!((v.value - 1.0).abs() < 1e-9);
        let a_minus = split(&a).unwrap().a_minus;
        assert!(v.witness.sub(&a_minus).unwrap().frobenius_sq().sqrt() < 1e-8);
        assert!((v.value_at_a_minus - 1.0).abs() < 1e-12);
    }

    #[test]
    fn c5_matches_closed_form() {
        let a = SymMatrix::from_fn(5, |i, j| {
            let d = i.abs_diff(j);
            if d == 1 || d == 4 {
                1.0
            } else {
                0.0
            }
        });
        let v = variational_splus(&a, VariationalOptions::default()).unwrap();
        let expect = 6.0 - 1.0 / (std::f64::consts::PI / 5.0).cos();
        assert!((v.value - expect).abs() < 1e-8, "{}", v.value);
    }

    #[test]
    fn iteration_cap_is_flagged() {
        let a = SymMatrix::from_fn(3, |i, j| if i != j { 1.0 } else { 0.0 });
        let v = variational_splus(&a, VariationalOptions { max_iters: 2, tol: 0.0 }).unwrap();
        assert!(!v.converged);
        assert_eq!(v.iterations, 2);
        assert!(v.value >= v.s_plus - 1e-12);
    }
}
