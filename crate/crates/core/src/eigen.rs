//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use crate::error::{LinalgError, Result};
use crate::matrix::{ComplexMatrix, ONE, ZERO};
use crate::tolerance::TolerancePolicy;

pub const MAX_SWEEPS: usize = 30;

/// `H = U diag(eigenvalues) U*` with eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// Largest eigenvalue magnitude, i.e. the operator norm of `H`.
    pub fn spectral_radius(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }

    /// `U diag(f(lambda)) U*`, symmetrized.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let u = &self.eigenvectors;
        let n = u.dim();
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = ZERO;
                for (k, w) in weights.iter().enumerate() {
                    acc += u[(i, k)] * u[(j, k)].conj() * *w;
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
            out[(i, i)].im = 0.0;
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| l)
    }
}

/// Eigendecomposition of a self-adjoint matrix.
///
/// The input must be self-adjoint within `pol`; it is symmetrized before the
/// iteration starts. Fails if the off-diagonal mass has not dropped below
/// `n * eps * ||H||_F` after [`MAX_SWEEPS`] sweeps.
pub fn hermitian_eigen(h: &ComplexMatrix, pol: &TolerancePolicy) -> Result<HermitianEigen> {
    let asym = h.distance(&h.adjoint());
    let bound = pol.bound(h.frobenius_norm());
    if asym > bound {
        return Err(LinalgError::NotSelfAdjoint {
            residual: asym,
            bound,
        });
    }
    let sym = h.hermitian_part();
    let (eig, off) = jacobi_with_residual(&sym);
    let n = h.dim() as f64;
    let threshold = n * f64::EPSILON * sym.frobenius_norm();
    if off > threshold {
        return Err(LinalgError::EigenNoConvergence {
            sweeps: MAX_SWEEPS,
            residual: off,
        });
    }
    Ok(eig)
}

/// Runs the iteration without the convergence verdict. Returns ascending
/// eigenvalues and the decomposition; callers that only need a spectral
/// bound can use this directly.
pub(crate) fn jacobi(h: &ComplexMatrix) -> (Vec<f64>, HermitianEigen) {
    let (eig, _) = jacobi_with_residual(h);
    (eig.eigenvalues.clone(), eig)
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi_with_residual(h: &ComplexMatrix) -> (HermitianEigen, f64) {
    let n = h.dim();
    let mut a: Vec<Complex64> = h.entries().to_vec();
    for i in 0..n {
        a[i * n + i].im = 0.0;
    }
    let mut v = vec![ZERO; n * n];
    for i in 0..n {
        v[i * n + i] = ONE;
    }

    let threshold = n as f64 * f64::EPSILON * h.frobenius_norm();
    let mut off = off_diagonal_norm(&a, n);
    let mut sweep = 0;
    while off > threshold && sweep < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let b = a[p * n + q];
                let abs_b = b.norm();
                if abs_b == 0.0 {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                // Negligible relative to both diagonal entries: drop it.
                if sweep > 3
                    && app.abs() + 100.0 * abs_b == app.abs()
                    && aqq.abs() + 100.0 * abs_b == aqq.abs()
                {
                    a[p * n + q] = ZERO;
                    a[q * n + p] = ZERO;
                    continue;
                }
                rotate(&mut a, &mut v, n, p, q, b, abs_b, app, aqq);
            }
        }
        off = off_diagonal_norm(&a, n);
        sweep += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let eigenvalues = order.iter().map(|&i| a[i * n + i].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |row, col| v[row * n + order[col]]);
    (
        HermitianEigen {
            eigenvalues,
            eigenvectors,
        },
        off,
    )
}

#[allow(clippy::too_many_arguments)]
#[inline]
fn rotate(
    a: &mut [Complex64],
    v: &mut [Complex64],
    n: usize,
    p: usize,
    q: usize,
    b: Complex64,
    abs_b: f64,
    app: f64,
    aqq: f64,
) {
    // Phase-rotate column q so the (p, q) entry becomes |b|, then apply the
    // real symmetric rotation that annihilates it.
    let phase = b / abs_b;
    let phase_conj = phase.conj();
    let theta = (aqq - app) / (2.0 * abs_b);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q] * phase_conj;
        a[k * n + p] = akp * c - akq * s;
        a[k * n + q] = akp * s + akq * c;

        let vkp = v[k * n + p];
        let vkq = v[k * n + q] * phase_conj;
        v[k * n + p] = vkp * c - vkq * s;
        v[k * n + q] = vkp * s + vkq * c;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k] * phase;
        a[p * n + k] = apk * c - aqk * s;
        a[q * n + k] = apk * s + aqk * c;
    }
    a[p * n + p] = Complex64::new(app - t * abs_b, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * abs_b, 0.0);
    a[p * n + q] = ZERO;
    a[q * n + p] = ZERO;
}
