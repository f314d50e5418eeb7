//! Operator-class predicates with tolerance and residual.

use serde::Serialize;

use crate::calculus::loewner_leq;
use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::tolerance::TolerancePolicy;

/// A tolerance-aware boolean: `holds` iff `residual <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub residual: f64,
    pub bound: f64,
}

impl Check {
    pub fn new(residual: f64, bound: f64) -> Self {
        Self {
            holds: residual <= bound,
            residual,
            bound,
        }
    }

    /// `residual / bound`; above 1 means the check failed.
    pub fn ratio(&self) -> f64 {
        if self.bound > 0.0 {
            self.residual / self.bound
        } else if self.residual > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    }

    fn failed() -> Self {
        Self {
            holds: false,
            residual: f64::INFINITY,
            bound: 0.0,
        }
    }
}

/// `||A - A*||_F <= tol * max(1, ||A||_F)`.
pub fn is_self_adjoint(a: &ComplexMatrix, pol: &TolerancePolicy) -> Check {
    Check::new(a.distance(&a.adjoint()), pol.bound(a.frobenius_norm()))
}

/// `||A + A*||_F <= tol * max(1, ||A||_F)`.
pub fn is_anti_symmetric(a: &ComplexMatrix, pol: &TolerancePolicy) -> Check {
    Check::new(
        (a + &a.adjoint()).frobenius_norm(),
        pol.bound(a.frobenius_norm()),
    )
}

/// `||A A* - A* A||_F <= tol * max(1, ||A||_F^2)`.
pub fn is_normal(a: &ComplexMatrix, pol: &TolerancePolicy) -> Check {
    let adj = a.adjoint();
    let comm = &(a * &adj) - &(&adj * a);
    let f = a.frobenius_norm();
    Check::new(comm.frobenius_norm(), pol.bound(f * f))
}

/// `A A* <= A* A` in the Löwner order. The residual is the negated smallest
/// eigenvalue of the self-commutator `A* A - A A*`.
pub fn is_hyponormal(a: &ComplexMatrix, pol: &TolerancePolicy) -> Check {
    let adj = a.adjoint();
    let left = (a * &adj).hermitian_part();
    let right = (&adj * a).hermitian_part();
    match loewner_leq(&left, &right, pol) {
        Ok(v) => Check {
            holds: v.holds,
            residual: -v.witness_lambda_min,
            bound: v.tolerance,
        },
        Err(_) => Check::failed(),
    }
}

/// Self-adjoint within tolerance and `lambda_min >= -tol`. The residual is
/// the negated smallest eigenvalue, or the asymmetry when `A` is not
/// self-adjoint.
pub fn is_positive(a: &ComplexMatrix, pol: &TolerancePolicy) -> Check {
    let sa = is_self_adjoint(a, pol);
    if !sa.holds {
        return Check { holds: false, ..sa };
    }
    let zero = ComplexMatrix::zeros(a.dim());
    match loewner_leq(&zero, a, pol) {
        Ok(v) => Check {
            holds: v.holds,
            residual: -v.witness_lambda_min,
            bound: v.tolerance,
        },
        Err(_) => Check::failed(),
    }
}

/// `||AB - BA||_F <= tol * max(1, ||A||_F ||B||_F)`.
pub fn commutes(a: &ComplexMatrix, b: &ComplexMatrix, pol: &TolerancePolicy) -> Result<Check> {
    let ab = a.multiply(b)?;
    let ba = b.multiply(a)?;
    Ok(Check::new(
        ab.distance(&ba),
        pol.bound(a.frobenius_norm() * b.frobenius_norm()),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport {
    pub self_adjoint: bool,
    pub normal: bool,
    pub hyponormal: bool,
    pub positive: bool,
    pub anti_symmetric: bool,
    pub residuals: ClassResiduals,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassResiduals {
    pub self_adjoint: f64,
    pub normal: f64,
    pub hyponormal: f64,
    pub positive: f64,
    pub anti_symmetric: f64,
}

/// Evaluates every predicate and closes the result under the implications
/// positive => self-adjoint => normal => hyponormal.
pub fn classify(a: &ComplexMatrix, pol: &TolerancePolicy) -> ClassReport {
    let sa = is_self_adjoint(a, pol);
    let normal = is_normal(a, pol);
    let hypo = is_hyponormal(a, pol);
    let pos = is_positive(a, pol);
    let anti = is_anti_symmetric(a, pol);

    let positive = pos.holds;
    let self_adjoint = sa.holds || positive;
    let normal_flag = normal.holds || self_adjoint;
    let hyponormal = hypo.holds || normal_flag;
    ClassReport {
        self_adjoint,
        normal: normal_flag,
        hyponormal,
        positive,
        anti_symmetric: anti.holds,
        residuals: ClassResiduals {
            self_adjoint: sa.residual,
            normal: normal.residual,
            hyponormal: hypo.residual,
            positive: pos.residual,
            anti_symmetric: anti.residual,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::I;
    use num_complex::Complex64;

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn real(dim: usize, e: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(dim, e).unwrap()
    }

    #[test]
    fn self_adjoint_examples() {
        assert!(is_self_adjoint(&ComplexMatrix::real_diagonal(&[2.0, -1.0]), &pol()).holds);
        assert!(!is_self_adjoint(&real(2, &[0.0, 1.0, 0.0, 0.0]), &pol()).holds);
        assert!(!is_self_adjoint(&ComplexMatrix::identity(2).scale(I), &pol()).holds);
    }

    #[test]
    fn normal_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = real(2, &[h, -h, h, h]);
        assert!(is_normal(&u, &pol()).holds);
        assert!(!is_normal(&real(2, &[0.0, 1.0, 2.0, 0.0]), &pol()).holds);
        let jordan = real(2, &[1.0, 1.0, 0.0, 1.0]);
        let c = is_normal(&jordan, &pol());
        assert!(!c.holds);
        // Self-commutator is diag(1, -1).
        assert!((c.residual - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hyponormal_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(is_hyponormal(&real(2, &[h, -h, h, h]), &pol()).holds);
        let c = is_hyponormal(&real(2, &[0.0, 1.0, 0.0, 0.0]), &pol());
        assert!(!c.holds);
        assert!((c.residual - 1.0).abs() < 1e-15);
        let d = ComplexMatrix::diagonal(&[I, Complex64::new(2.0, 0.0)]);
        assert!(is_hyponormal(&d, &pol()).holds);
    }

    #[test]
    fn positive_examples() {
        let a = real(2, &[1.0, 2.0, -3.0, 0.5]);
        assert!(is_positive(&(&a.adjoint() * &a), &pol()).holds);
        assert!(!is_positive(&ComplexMatrix::real_diagonal(&[2.0, -1.0]), &pol()).holds);
        assert!(is_positive(&ComplexMatrix::zeros(2), &pol()).holds);
        assert!(!is_positive(&real(2, &[1.0, 1.0, 0.0, 1.0]), &pol()).holds);
    }

    #[test]
    fn anti_symmetric_examples() {
        assert!(is_anti_symmetric(&real(2, &[0.0, 1.0, -1.0, 0.0]), &pol()).holds);
        let t = real(2, &[1.0, 5.0, -2.0, 3.0]);
        assert!(is_anti_symmetric(&(&t - &t.adjoint()), &pol()).holds);
        assert!(!is_anti_symmetric(&ComplexMatrix::identity(2), &pol()).holds);
    }

    #[test]
    fn commutes_examples() {
        let a = real(2, &[1.0, 1.0, 0.0, 1.0]);
        let b = real(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(commutes(&a, &b, &pol()).unwrap().holds);
        let a = ComplexMatrix::real_diagonal(&[2.0, -1.0]);
        let b = real(2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(!commutes(&a, &b, &pol()).unwrap().holds);
        let a = real(2, &[1.0, 2.0, 3.0, 4.0]);
        assert!(commutes(&a, &(&a * &a), &pol()).unwrap().holds);
        assert!(commutes(&a, &ComplexMatrix::identity(3), &pol()).is_err());
    }

    #[test]
    fn classify_closes_implications() {
        let r = classify(&ComplexMatrix::real_diagonal(&[1.0, 3.0]), &pol());
        assert!(r.positive && r.self_adjoint && r.normal && r.hyponormal);
        assert!(!r.anti_symmetric);
        let r = classify(&real(2, &[0.0, 1.0, 0.0, 0.0]), &pol());
        assert!(!r.self_adjoint && !r.normal && !r.hyponormal && !r.positive);
    }
}
