//! Claims: a hypothesis, a conclusion, and the ensemble that exercises them.

mod catalog;
mod checks;
pub mod probe;
pub mod registry;
pub mod suite;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::error::LinalgError;
use crate::generators::{EnsembleKind, EnsembleSpec, Seed};
use crate::matrix::ComplexMatrix;
use crate::predicates::Check;
use crate::tolerance::TolerancePolicy;

pub use catalog::{catalog, find};
pub use checks::NamedCheck;

/// Evaluates one side of a claim over the instance's matrices.
pub type Evaluator = fn(&[ComplexMatrix], &TolerancePolicy) -> crate::Result<Vec<NamedCheck>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    /// The conclusion follows from the hypothesis for every instance.
    AlwaysHolds,
    /// A fixed instance meeting part of a hypothesis while the conclusion fails.
    RegistryViolation,
}

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// The mathematical statement, with slot names as used in reports.
    pub statement: &'static str,
    pub slots: &'static [&'static str],
    /// Smallest and largest accepted matrix count.
    pub arity: (usize, usize),
    pub hypothesis: Evaluator,
    pub conclusion: Evaluator,
    /// Alternative ensembles; each trial draws one uniformly. Empty for
    /// registry claims.
    pub ensembles: &'static [EnsembleKind],
    pub invertible: bool,
    /// Dimensions the claim is restricted to, if any.
    pub fixed_dims: Option<&'static [usize]>,
    pub expect: Expectation,
    pub notes: &'static [&'static str],
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

impl Claim {
    pub fn ensemble_specs(&self, dim: usize) -> Vec<EnsembleSpec> {
        self.ensembles
            .iter()
            .map(|&kind| {
                let spec = EnsembleSpec::new(dim, kind);
                if self.invertible {
                    spec.invertible()
                } else {
                    spec
                }
            })
            .collect()
    }

    /// Dimensions a suite should visit for the requested ones.
    pub fn effective_dims(&self, requested: &[usize]) -> Vec<usize> {
        match self.fixed_dims {
            Some(d) => d.to_vec(),
            None => requested.to_vec(),
        }
    }

    /// Draws an instance for `seed` at dimension `dim`.
    pub fn sample(&self, dim: usize, seed: Seed) -> ClaimInstance {
        use rand::Rng;
        let mut rng = seed.rng();
        let specs = self.ensemble_specs(dim);
        let spec = if specs.len() == 1 {
            specs[0]
        } else {
            specs[rng.random_range(0..specs.len())]
        };
        ClaimInstance {
            claim_id: self.id.to_string(),
            matrices: spec.sample(&mut rng),
            seed: Some(seed),
        }
    }

    pub fn metadata(&self) -> ClaimMetadata {
        ClaimMetadata {
            id: self.id,
            description: self.description,
            statement: self.statement,
            slots: self.slots,
            arity: self.arity,
            ensembles: self.ensembles,
            invertible: self.invertible,
            fixed_dims: self.fixed_dims,
            expect: self.expect,
            notes: self.notes,
        }
    }
}

/// Serializable catalog entry.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimMetadata {
    pub id: &'static str,
    pub description: &'static str,
    pub statement: &'static str,
    pub slots: &'static [&'static str],
    pub arity: (usize, usize),
    pub ensembles: &'static [EnsembleKind],
    pub invertible: bool,
    pub fixed_dims: Option<&'static [usize]>,
    pub expect: Expectation,
    pub notes: &'static [&'static str],
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimInstance {
    pub claim_id: String,
    pub matrices: Vec<ComplexMatrix>,
    /// `None` for registry or user-supplied instances.
    pub seed: Option<Seed>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Violation,
    HypothesisFail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub hypothesis_ok: bool,
    pub conclusion_ok: bool,
    pub verdict: Verdict,
    pub hypotheses: Vec<NamedCheck>,
    pub conclusions: Vec<NamedCheck>,
}

impl ClaimResult {
    /// Every check's residual keyed by its name.
    pub fn residuals(&self) -> BTreeMap<String, f64> {
        self.hypotheses
            .iter()
            .chain(&self.conclusions)
            .map(|c| (c.name.clone(), c.check.residual))
            .collect()
    }

    /// The conclusion check closest to (or furthest past) its bound.
    pub fn decisive(&self) -> Option<&NamedCheck> {
        self.conclusions
            .iter()
            .fold(None, |best: Option<&NamedCheck>, c| match best {
                Some(b) if b.check.ratio() >= c.check.ratio() => Some(b),
                _ => Some(c),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("claim {id} takes {min}..={max} matrices, got {got}")]
    Arity {
        id: String,
        min: usize,
        max: usize,
        got: usize,
    },

    #[error("claim {id}: matrices have differing dimensions")]
    MixedDimensions { id: String },

    #[error("claim {id}: numerical failure: {source}")]
    Numerical {
        id: String,
        #[source]
        source: LinalgError,
    },
}

fn failed_evaluation(err: &LinalgError) -> NamedCheck {
    NamedCheck {
        name: format!("evaluation error: {err}"),
        check: Check {
            holds: false,
            residual: f64::INFINITY,
            bound: 0.0,
        },
    }
}

/// Evaluates the hypothesis, then the conclusion.
///
/// The conclusion is evaluated even when the hypothesis fails, so registry
/// entries and probes can report it. A numerical failure is an error only
/// when the hypothesis held; otherwise it is recorded as a failed conclusion.
pub fn check_claim(
    instance: &ClaimInstance,
    pol: &TolerancePolicy,
) -> Result<ClaimResult, ClaimError> {
    let claim = find(&instance.claim_id)
        .ok_or_else(|| ClaimError::UnknownClaim(instance.claim_id.clone()))?;
    let mats = &instance.matrices;
    let (min, max) = claim.arity;
    if mats.len() < min || mats.len() > max {
        return Err(ClaimError::Arity {
            id: claim.id.to_string(),
            min,
            max,
            got: mats.len(),
        });
    }
    if mats.iter().any(|m| m.dim() != mats[0].dim()) {
        return Err(ClaimError::MixedDimensions {
            id: claim.id.to_string(),
        });
    }

    let numerical = |source| ClaimError::Numerical {
        id: claim.id.to_string(),
        source,
    };
    let hypotheses = (claim.hypothesis)(mats, pol).map_err(numerical)?;
    let hypothesis_ok = hypotheses.iter().all(|c| c.check.holds);
    let conclusions = match (claim.conclusion)(mats, pol) {
        Ok(c) => c,
        Err(e) if !hypothesis_ok => vec![failed_evaluation(&e)],
        Err(e) => return Err(numerical(e)),
    };
    let conclusion_ok = conclusions.iter().all(|c| c.check.holds);
    let verdict = match (hypothesis_ok, conclusion_ok) {
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Violation,
        (false, _) => Verdict::HypothesisFail,
    };
    Ok(ClaimResult {
        claim_id: claim.id.to_string(),
        hypothesis_ok,
        conclusion_ok,
        verdict,
        hypotheses,
        conclusions,
    })
}

/// Re-draws and re-checks the instance for a seed.
pub fn replay(
    claim_id: &str,
    dim: usize,
    seed: Seed,
    pol: &TolerancePolicy,
) -> Result<ClaimResult, ClaimError> {
    let claim = find(claim_id).ok_or_else(|| ClaimError::UnknownClaim(claim_id.to_string()))?;
    check_claim(&claim.sample(dim, seed), pol)
}
