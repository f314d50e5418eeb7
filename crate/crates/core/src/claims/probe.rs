//! Conclusions evaluated on unconstrained matrices.
//!
//! A conclusion that never fails on general input would make its claim's
//! check vacuous. Conclusions that do hold generally are listed as
//! exceptions rather than treated as errors.

use rayon::prelude::*;
use serde::Serialize;

use crate::generators::{gen_general, Seed};
use crate::tolerance::TolerancePolicy;

use super::{catalog, find, ClaimError, Expectation};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeSummary {
    pub id: String,
    pub trials: u64,
    pub violations: u64,
    pub errors: u64,
    pub first_violation: Option<Seed>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub dim: usize,
    pub claims: Vec<ProbeSummary>,
    /// Claims whose conclusion held on every instance it was defined on.
    pub exceptions: Vec<String>,
    /// Claims whose conclusion could not be evaluated on any instance, such
    /// as square roots of matrices that are not positive.
    pub undefined: Vec<String>,
}

impl ProbeReport {
    pub fn summary(&self, id: &str) -> Option<&ProbeSummary> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// Theorem claim ids, in catalog order.
pub fn theorem_ids() -> Vec<String> {
    catalog()
        .iter()
        .filter(|c| c.expect == Expectation::AlwaysHolds)
        .map(|c| c.id.to_string())
        .collect()
}

/// Draws `trials` tuples of general `dim x dim` matrices per claim and
/// evaluates only the conclusion.
pub fn run_probe(
    claim_ids: &[String],
    dim: usize,
    trials: u64,
    master_seed: u64,
    pol: &TolerancePolicy,
) -> Result<ProbeReport, ClaimError> {
    let claims = claim_ids
        .iter()
        .map(|id| find(id).ok_or_else(|| ClaimError::UnknownClaim(id.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let claims: Vec<ProbeSummary> = claims
        .par_iter()
        .map(|claim| {
            let tag = format!("probe:{}:{dim}", claim.id);
            let mut s = ProbeSummary {
                id: claim.id.to_string(),
                trials,
                violations: 0,
                errors: 0,
                first_violation: None,
            };
            for t in 0..trials {
                let seed = Seed::new(master_seed, tag.as_str(), t);
                let mut rng = seed.rng();
                let mats: Vec<_> = (0..claim.arity.0)
                    .map(|_| gen_general(dim, 1.0, &mut rng))
                    .collect();
                match (claim.conclusion)(&mats, pol) {
                    Ok(checks) if checks.iter().all(|c| c.check.holds) => {}
                    Ok(_) => {
                        s.violations += 1;
                        s.first_violation.get_or_insert(seed);
                    }
                    Err(_) => s.errors += 1,
                }
            }
            s
        })
        .collect();
    let ids = |keep: fn(&ProbeSummary) -> bool| {
        claims
            .iter()
            .filter(|c| keep(c))
            .map(|c| c.id.clone())
            .collect()
    };
    let exceptions = ids(|c| c.violations == 0 && c.errors < c.trials);
    let undefined = ids(|c| c.errors == c.trials);
    Ok(ProbeReport {
        dim,
        claims,
        exceptions,
        undefined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_inequality_fails_on_general_pairs() {
        let pol = TolerancePolicy::suite();
        let r = run_probe(&["C-TRI".to_string()], 2, 200, 1, &pol).unwrap();
        let s = r.summary("C-TRI").unwrap();
        assert!(s.violations > 0);
        assert!(s.first_violation.is_some());
        assert!(r.exceptions.is_empty());
    }

    #[test]
    fn square_of_general_matrix_is_not_negative() {
        // A^2 <= 0 fails for almost every general matrix.
        let pol = TolerancePolicy::suite();
        let r = run_probe(&["L-ANTI".to_string()], 3, 50, 1, &pol).unwrap();
        assert!(r.summary("L-ANTI").unwrap().violations > 0);
    }

    #[test]
    fn square_roots_of_general_matrices_are_undefined() {
        let pol = TolerancePolicy::suite();
        let r = run_probe(&["L-SQRT-SUM".to_string()], 2, 20, 1, &pol).unwrap();
        assert_eq!(r.undefined, ["L-SQRT-SUM"]);
        assert!(r.exceptions.is_empty());
    }
}
