//! Functional calculus on positive semidefinite matrices: square roots,
//! fractional powers, the absolute value `|A| = sqrt(A* A)`, the Löwner order
//! and inversion.

use serde::Serialize;

use crate::eigen::{self, hermitian_eigen, HermitianEigen};
use crate::error::{LinalgError, Result};
use crate::lu::Lu;
use crate::matrix::ComplexMatrix;
use crate::tolerance::TolerancePolicy;

/// Condition-number ceiling for [`inverse`].
pub const MAX_CONDITION: f64 = 1e8;

/// Iteration cap for [`psd_sqrt_iterative`].
pub const MAX_SQRT_ITERATIONS: usize = 100;

/// A self-adjoint matrix whose spectrum is non-negative up to
/// `rel * max(1, lambda_max)`.
///
/// Construction validates and keeps the eigendecomposition, which every
/// spectral function below reuses.
#[derive(Debug, Clone)]
pub struct PsdMatrix {
    matrix: ComplexMatrix,
    eigen: HermitianEigen,
    pol: TolerancePolicy,
}

impl PsdMatrix {
    pub fn new(m: &ComplexMatrix, pol: &TolerancePolicy) -> Result<Self> {
        let eigen = hermitian_eigen(m, pol)?;
        let tol = clamp_tolerance(&eigen, pol);
        if eigen.min() < -tol {
            return Err(LinalgError::NotPositive {
                witness: eigen.min(),
                tol,
            });
        }
        Ok(Self {
            matrix: m.hermitian_part(),
            eigen,
            pol: *pol,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eigen(&self) -> &HermitianEigen {
        &self.eigen
    }

    pub fn policy(&self) -> &TolerancePolicy {
        &self.pol
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Applies a monotone non-negative spectral function. Eigenvalues in
    /// `[-tol, 0)` are clamped to zero first.
    fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> PsdMatrix {
        let g = |l: f64| f(l.max(0.0));
        let matrix = self.eigen.apply(g);
        let eigen = HermitianEigen {
            eigenvalues: self.eigen.eigenvalues.iter().map(|&l| g(l)).collect(),
            eigenvectors: self.eigen.eigenvectors.clone(),
        };
        PsdMatrix {
            matrix,
            eigen,
            pol: self.pol,
        }
    }
}

impl AsRef<ComplexMatrix> for PsdMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

fn clamp_tolerance(eigen: &HermitianEigen, pol: &TolerancePolicy) -> f64 {
    pol.rel * eigen.spectral_radius().max(1.0)
}

/// Principal square root through the eigendecomposition.
pub fn psd_sqrt(p: &PsdMatrix) -> PsdMatrix {
    p.map_spectrum(f64::sqrt)
}

/// `P^alpha` for `alpha` in `[0, 1]`, with `0^0 = 1` so that `P^0 = I`.
pub fn psd_power(p: &PsdMatrix, alpha: f64) -> Result<PsdMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(LinalgError::ExponentOutOfRange(alpha));
    }
    Ok(p.map_spectrum(|l| l.powf(alpha)))
}

/// Principal square root by the Denman–Beavers coupled iteration with
/// determinant scaling. Shares no code path with [`psd_sqrt`] beyond the final
/// PSD validation, so the two serve as oracles for each other.
pub fn psd_sqrt_iterative(p: &PsdMatrix) -> Result<PsdMatrix> {
    let n = p.matrix.dim();
    let shift = n as f64 * f64::EPSILON * p.matrix.frobenius_norm().max(1.0);
    let mut y = &p.matrix + &ComplexMatrix::identity(n).scale_real(shift);
    let mut z = ComplexMatrix::identity(n);

    let step_tol = 10.0 * n as f64 * f64::EPSILON;
    let mut scaling = true;
    let mut prev_step = f64::INFINITY;
    let mut step = f64::INFINITY;
    let mut converged = false;
    for _ in 0..MAX_SQRT_ITERATIONS {
        let lu_y = Lu::factor(&y);
        let lu_z = Lu::factor(&z);
        let (y_inv, z_inv) = match (lu_y.inverse(), lu_z.inverse()) {
            (Some(yi), Some(zi)) => (yi, zi),
            _ => {
                return Err(LinalgError::Singular {
                    condition: f64::INFINITY,
                })
            }
        };
        let mu = if scaling {
            (-(lu_y.log_abs_det() + lu_z.log_abs_det()) / (2.0 * n as f64)).exp()
        } else {
            1.0
        };
        let y_next = (&y.scale_real(mu) + &z_inv.scale_real(1.0 / mu)).scale_real(0.5);
        let z_next = (&z.scale_real(mu) + &y_inv.scale_real(1.0 / mu)).scale_real(0.5);

        step = y_next.distance(&y) / y_next.frobenius_norm().max(f64::MIN_POSITIVE);
        y = y_next;
        z = z_next;
        if step < 1e-2 {
            scaling = false;
        }
        // Stop at round-off level, or once the steps stop shrinking near it.
        if step <= step_tol || (step < 1e-10 && step >= prev_step) {
            converged = true;
            break;
        }
        prev_step = step;
    }
    if !converged {
        return Err(LinalgError::SqrtNoConvergence {
            iterations: MAX_SQRT_ITERATIONS,
            residual: step,
        });
    }
    PsdMatrix::new(&y.hermitian_part(), &p.pol)
}

/// `|A| = sqrt(A* A)`.
pub fn abs_value(a: &ComplexMatrix, pol: &TolerancePolicy) -> Result<PsdMatrix> {
    let gram = &a.adjoint() * a;
    Ok(psd_sqrt(&PsdMatrix::new(&gram, pol)?))
}

/// Outcome of an `A <= B` test in the Löwner order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoewnerVerdict {
    pub holds: bool,
    /// Smallest eigenvalue of `B - A`.
    pub witness_lambda_min: f64,
    /// `witness + tolerance`; negative exactly when the verdict fails.
    pub margin: f64,
    pub tolerance: f64,
}

/// Tests `A <= B`, i.e. `B - A >= 0`, with tolerance
/// `rel * max(1, ||A||_F, ||B||_F) + abs`.
pub fn loewner_leq(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    pol: &TolerancePolicy,
) -> Result<LoewnerVerdict> {
    for m in [a, b] {
        let residual = m.distance(&m.adjoint());
        let bound = pol.bound(m.frobenius_norm());
        if residual > bound {
            return Err(LinalgError::NotSelfAdjoint { residual, bound });
        }
    }
    let diff = b.try_sub(a)?.hermitian_part();
    let witness = hermitian_eigen(&diff, pol)?.min();
    let tolerance = pol.bound(a.frobenius_norm().max(b.frobenius_norm()));
    Ok(LoewnerVerdict {
        holds: witness >= -tolerance,
        witness_lambda_min: witness,
        margin: witness + tolerance,
        tolerance,
    })
}

/// Smallest and largest singular values.
pub fn singular_value_bounds(a: &ComplexMatrix) -> (f64, f64) {
    let gram = (&a.adjoint() * a).hermitian_part();
    let (values, _) = eigen::jacobi(&gram);
    let lo = values[0].max(0.0).sqrt();
    let hi = values.last().copied().unwrap_or(0.0).max(0.0).sqrt();
    (lo, hi)
}

/// 2-norm condition number; infinite for singular input.
pub fn condition_number(a: &ComplexMatrix) -> f64 {
    let (lo, hi) = singular_value_bounds(a);
    if hi == 0.0 {
        return f64::INFINITY;
    }
    if lo == 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// Inverse by partial-pivot elimination; refuses matrices whose condition
/// number exceeds [`MAX_CONDITION`].
pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let condition = condition_number(a);
    if !(condition <= MAX_CONDITION) {
        return Err(LinalgError::Singular { condition });
    }
    Lu::factor(a)
        .inverse()
        .ok_or(LinalgError::Singular { condition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn psd(m: &ComplexMatrix) -> PsdMatrix {
        PsdMatrix::new(m, &pol()).unwrap()
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = psd_sqrt(&psd(&ComplexMatrix::real_diagonal(&[1.0, 4.0])));
        assert!(
            r.matrix()
                .distance(&ComplexMatrix::real_diagonal(&[1.0, 2.0]))
                < 1e-15
        );
        let id = ComplexMatrix::identity(3);
        assert_eq!(psd_sqrt(&psd(&id)).matrix(), &id);
    }

    #[test]
    fn sqrt_squares_back() {
        let p = ComplexMatrix::from_real(2, &[1.0, 1.0, 1.0, 2.0]).unwrap();
        let r = psd_sqrt(&psd(&p));
        let r2 = r.matrix() * r.matrix();
        assert!(r2.distance(&p) <= 1e-10 * p.frobenius_norm().max(1.0));
        // Eigenvalues are the square roots of (3 -+ sqrt 5)/2.
        let s5 = 5f64.sqrt();
        assert!((r.eigen().eigenvalues[0] - ((3.0 - s5) / 2.0).sqrt()).abs() < 1e-15);
        assert!((r.eigen().eigenvalues[1] - ((3.0 + s5) / 2.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn iterative_sqrt_examples() {
        let r = psd_sqrt_iterative(&psd(&ComplexMatrix::real_diagonal(&[4.0]))).unwrap();
        assert!((r.matrix()[(0, 0)].re - 2.0).abs() < 1e-12);
        let r = psd_sqrt_iterative(&psd(&ComplexMatrix::real_diagonal(&[1.0, 4.0]))).unwrap();
        assert!(
            r.matrix()
                .distance(&ComplexMatrix::real_diagonal(&[1.0, 2.0]))
                < 1e-8
        );
    }

    #[test]
    fn indefinite_input_rejected_with_witness() {
        match PsdMatrix::new(&ComplexMatrix::real_diagonal(&[2.0, -1.0]), &pol()) {
            Err(LinalgError::NotPositive { witness, .. }) => assert_eq!(witness, -1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_off_negatives_are_clamped() {
        let p = ComplexMatrix::real_diagonal(&[4.0, -1e-12]);
        let r = psd_sqrt(&psd(&p));
        assert_eq!(r.matrix()[(1, 1)].re, 0.0);
    }

    #[test]
    fn abs_value_examples() {
        let a = ComplexMatrix::real_diagonal(&[2.0, -1.0]);
        let r = abs_value(&a, &pol()).unwrap();
        assert!(
            r.matrix()
                .distance(&ComplexMatrix::real_diagonal(&[2.0, 1.0]))
                < 1e-15
        );

        let ab = ComplexMatrix::from_real(2, &[0.0, 2.0, -1.0, 0.0]).unwrap();
        let r = abs_value(&ab, &pol()).unwrap();
        assert!(
            r.matrix()
                .distance(&ComplexMatrix::real_diagonal(&[1.0, 2.0]))
                < 1e-15
        );

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = ComplexMatrix::new(
            2,
            vec![
                Complex64::new(h, 0.0),
                Complex64::new(0.0, h),
                Complex64::new(0.0, h),
                Complex64::new(h, 0.0),
            ],
        )
        .unwrap();
        let r = abs_value(&u, &pol()).unwrap();
        assert!(r.matrix().distance(&ComplexMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn power_examples() {
        let p = psd(&ComplexMatrix::real_diagonal(&[4.0, 9.0]));
        let half = psd_power(&p, 0.5).unwrap();
        assert!(
            half.matrix()
                .distance(&ComplexMatrix::real_diagonal(&[2.0, 3.0]))
                < 1e-15
        );
        assert!(psd_power(&p, 1.0).unwrap().matrix().distance(p.matrix()) < 1e-15);

        let singular = psd(&ComplexMatrix::real_diagonal(&[0.0, 4.0]));
        let zeroth = psd_power(&singular, 0.0).unwrap();
        assert_eq!(zeroth.matrix(), &ComplexMatrix::identity(2));

        assert_eq!(
            psd_power(&p, 1.5).unwrap_err(),
            LinalgError::ExponentOutOfRange(1.5)
        );
        assert!(psd_power(&p, -0.1).is_err());
        assert!(psd_power(&p, f64::NAN).is_err());
    }

    #[test]
    fn half_power_matches_sqrt() {
        let p = psd(&ComplexMatrix::from_real(2, &[1.0, 1.0, 1.0, 2.0]).unwrap());
        let a = psd_power(&p, 0.5).unwrap();
        let b = psd_sqrt(&p);
        assert!(a.matrix().distance(b.matrix()) <= 1e-12);
    }

    #[test]
    fn loewner_examples() {
        let v = loewner_leq(
            &ComplexMatrix::identity(2),
            &ComplexMatrix::real_diagonal(&[2.0, 3.0]),
            &pol(),
        )
        .unwrap();
        assert!(v.holds);
        assert!((v.witness_lambda_min - 1.0).abs() < 1e-15);

        let s2 = ComplexMatrix::identity(2).scale_real(2f64.sqrt());
        let b = ComplexMatrix::from_real(2, &[3.0, -1.0, -1.0, 1.0]).unwrap();
        let v = loewner_leq(&s2, &b, &pol()).unwrap();
        assert!(!v.holds);
        assert!(v.witness_lambda_min < 0.0);
        assert!(v.margin < 0.0);

        let v = loewner_leq(&b, &b, &pol()).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness_lambda_min, 0.0);
    }

    #[test]
    fn loewner_rejects_non_hermitian() {
        let n = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            loewner_leq(&n, &ComplexMatrix::identity(2), &pol()),
            Err(LinalgError::NotSelfAdjoint { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let inv = inverse(&ComplexMatrix::real_diagonal(&[2.0, 4.0])).unwrap();
        assert!(inv.distance(&ComplexMatrix::real_diagonal(&[0.5, 0.25])) < 1e-15);
        let inv = inverse(&ComplexMatrix::real_diagonal(&[1.0, 4.0])).unwrap();
        assert!(inv.distance(&ComplexMatrix::real_diagonal(&[1.0, 0.25])) < 1e-15);
    }

    #[test]
    fn inverse_refuses_ill_conditioned() {
        let a = ComplexMatrix::real_diagonal(&[1.0, 1e-9]);
        assert!(matches!(inverse(&a), Err(LinalgError::Singular { .. })));
        assert!(matches!(
            inverse(&ComplexMatrix::zeros(2)),
            Err(LinalgError::Singular { .. })
        ));
    }
}
