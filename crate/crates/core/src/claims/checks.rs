use serde::Serialize;

use crate::calculus::{abs_value, condition_number, inverse, loewner_leq, MAX_CONDITION};
use crate::error::{LinalgError, Result};
use crate::matrix::ComplexMatrix;
use crate::predicates::{self, Check};
use crate::tolerance::TolerancePolicy;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    #[serde(flatten)]
    pub check: Check,
}

/// Accumulates named checks under one policy.
pub(crate) struct Checks<'p> {
    pub pol: &'p TolerancePolicy,
    out: Vec<NamedCheck>,
}

impl<'p> Checks<'p> {
    pub fn new(pol: &'p TolerancePolicy) -> Self {
        Self {
            pol,
            out: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, check: Check) -> &mut Self {
        self.out.push(NamedCheck {
            name: name.into(),
            check,
        });
        self
    }

    /// Approximate equality in the shared Frobenius doctrine.
    pub fn eq(
        &mut self,
        name: impl Into<String>,
        x: &ComplexMatrix,
        y: &ComplexMatrix,
    ) -> &mut Self {
        let c = Check::new(x.distance(y), x.eq_bound(y, self.pol));
        self.push(name, c)
    }

    /// `x <= y` in the Löwner order; residual is `-lambda_min(y - x)`.
    ///
    /// The order only relates self-adjoint operators, so a non-self-adjoint
    /// side fails the check with its self-adjointness residual.
    pub fn leq(
        &mut self,
        name: impl Into<String>,
        x: &ComplexMatrix,
        y: &ComplexMatrix,
    ) -> Result<&mut Self> {
        let c = match loewner_leq(x, y, self.pol) {
            Ok(v) => Check {
                holds: v.holds,
                residual: -v.witness_lambda_min,
                bound: v.tolerance,
            },
            Err(LinalgError::NotSelfAdjoint { residual, bound }) => Check {
                holds: false,
                residual,
                bound,
            },
            Err(e) => return Err(e),
        };
        Ok(self.push(name, c))
    }

    /// `lhs <= rhs + tol * max(1, scale)` for norms.
    pub fn norm_leq(
        &mut self,
        name: impl Into<String>,
        lhs: f64,
        rhs: f64,
        scale: f64,
    ) -> &mut Self {
        let c = Check::new(lhs - rhs, self.pol.bound(scale));
        self.push(name, c)
    }

    pub fn normal(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let c = predicates::is_normal(m, self.pol);
        self.push(name, c)
    }

    pub fn hyponormal(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let c = predicates::is_hyponormal(m, self.pol);
        self.push(name, c)
    }

    pub fn self_adjoint(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let c = predicates::is_self_adjoint(m, self.pol);
        self.push(name, c)
    }

    pub fn positive(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let c = predicates::is_positive(m, self.pol);
        self.push(name, c)
    }

    pub fn anti_symmetric(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let c = predicates::is_anti_symmetric(m, self.pol);
        self.push(name, c)
    }

    pub fn commute(
        &mut self,
        name: impl Into<String>,
        a: &ComplexMatrix,
        b: &ComplexMatrix,
    ) -> Result<&mut Self> {
        let c = predicates::commutes(a, b, self.pol)?;
        Ok(self.push(name, c))
    }

    /// Pairwise commutation of a family, one check per unordered pair.
    pub fn pairwise_commute(
        &mut self,
        slots: &[&str],
        mats: &[ComplexMatrix],
    ) -> Result<&mut Self> {
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                let name = format!("{0}{1}={1}{0}", slots[i], slots[j]);
                self.commute(name, &mats[i], &mats[j])?;
            }
        }
        Ok(self)
    }

    /// At most `allowed` members fail the normality test; residual is the
    /// count of non-normal members.
    pub fn at_most_non_normal(
        &mut self,
        name: impl Into<String>,
        mats: &[ComplexMatrix],
        allowed: usize,
    ) -> &mut Self {
        let bad = mats
            .iter()
            .filter(|m| !predicates::is_normal(m, self.pol).holds)
            .count();
        self.push(name, Check::new(bad as f64, allowed as f64))
    }

    /// Invertibility in the sense of [`inverse`]: condition number within
    /// [`MAX_CONDITION`].
    pub fn invertible(&mut self, name: impl Into<String>, m: &ComplexMatrix) -> &mut Self {
        let kappa = condition_number(m);
        self.push(name, Check::new(kappa, MAX_CONDITION))
    }

    pub fn finish(&mut self) -> Vec<NamedCheck> {
        std::mem::take(&mut self.out)
    }
}

/// `|m|` as a plain matrix.
pub(crate) fn abs(m: &ComplexMatrix, pol: &TolerancePolicy) -> Result<ComplexMatrix> {
    Ok(abs_value(m, pol)?.into_matrix())
}

pub(crate) fn inv(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    inverse(m)
}
