//! Seeded trial runs over the catalog.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generators::Seed;
use crate::tolerance::TolerancePolicy;

use super::registry::{self, RegistryOutcome};
use super::{catalog, check_claim, find, Claim, ClaimError, Expectation, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub claims: Vec<String>,
    pub dims: Vec<usize>,
    pub trials: u64,
    /// Index of the first trial; trial `t` of a run uses seed index
    /// `first_trial + t`.
    pub first_trial: u64,
    pub master_seed: u64,
    pub pol: TolerancePolicy,
    #[serde(skip)]
    pub parallel: bool,
}

impl SuiteConfig {
    pub fn new(claims: Vec<String>, dims: Vec<usize>, trials: u64, master_seed: u64) -> Self {
        Self {
            claims,
            dims,
            trials,
            first_trial: 0,
            master_seed,
            pol: TolerancePolicy::suite(),
            parallel: true,
        }
    }

    /// Every catalog claim.
    pub fn all(dims: Vec<usize>, trials: u64, master_seed: u64) -> Self {
        let ids = catalog().iter().map(|c| c.id.to_string()).collect();
        Self::new(ids, dims, trials, master_seed)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuiteError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("no dimensions given")]
    NoDims,
    #[error("dimension must be at least 1")]
    ZeroDim,
    #[error(transparent)]
    Claim(#[from] ClaimError),
}

/// Seed tag for a claim at a dimension.
pub fn claim_tag(id: &str, dim: usize) -> String {
    format!("{id}:{dim}")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub dim: usize,
    pub seed: Seed,
    pub replay: String,
    pub residuals: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRecord {
    pub dim: usize,
    pub seed: Option<Seed>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstResidual {
    pub check: String,
    pub residual: f64,
    pub bound: f64,
    pub dim: usize,
    pub seed: Option<Seed>,
}

impl WorstResidual {
    fn ratio(&self) -> f64 {
        crate::predicates::Check::new(self.residual, self.bound).ratio()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimSummary {
    pub id: String,
    pub expect: Expectation,
    pub dims: Vec<usize>,
    pub trials: u64,
    pub passes: u64,
    pub violations: Vec<ViolationRecord>,
    pub hypothesis_failures: u64,
    pub numerical_errors: Vec<ErrorRecord>,
    pub worst_residual: Option<WorstResidual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub registry: Option<RegistryOutcome>,
    pub notes: Vec<String>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub claims: Vec<ClaimSummary>,
    pub verdict: Status,
}

impl SuiteReport {
    pub fn total_trials(&self) -> u64 {
        self.claims.iter().map(|c| c.trials).sum()
    }

    pub fn total_violations(&self) -> usize {
        self.claims.iter().map(|c| c.violations.len()).sum()
    }
}

enum Outcome {
    Pass(Option<WorstResidual>),
    Violation(ViolationRecord, Option<WorstResidual>),
    HypothesisFail,
    Error(ErrorRecord),
}

fn run_trial(claim: &Claim, dim: usize, seed: Seed, pol: &TolerancePolicy) -> Outcome {
    let instance = claim.sample(dim, seed.clone());
    match check_claim(&instance, pol) {
        Ok(result) => {
            let worst = result.decisive().map(|c| WorstResidual {
                check: c.name.clone(),
                residual: c.check.residual,
                bound: c.check.bound,
                dim,
                seed: Some(seed.clone()),
            });
            match result.verdict {
                Verdict::Pass => Outcome::Pass(worst),
                Verdict::HypothesisFail => Outcome::HypothesisFail,
                Verdict::Violation => Outcome::Violation(
                    ViolationRecord {
                        dim,
                        replay: seed.replay_token(),
                        seed,
                        residuals: result.residuals(),
                    },
                    worst,
                ),
            }
        }
        Err(e) => Outcome::Error(ErrorRecord {
            dim,
            seed: Some(seed),
            message: e.to_string(),
        }),
    }
}

fn keep_worst(slot: &mut Option<WorstResidual>, candidate: Option<WorstResidual>) {
    if let Some(c) = candidate {
        match slot {
            Some(w) if w.ratio() >= c.ratio() => {}
            _ => *slot = Some(c),
        }
    }
}

fn empty_summary(claim: &Claim, dims: Vec<usize>) -> ClaimSummary {
    ClaimSummary {
        id: claim.id.to_string(),
        expect: claim.expect,
        dims,
        trials: 0,
        passes: 0,
        violations: Vec::new(),
        hypothesis_failures: 0,
        numerical_errors: Vec::new(),
        worst_residual: None,
        registry: None,
        notes: claim.notes.iter().map(|n| n.to_string()).collect(),
        status: Status::Pass,
    }
}

fn registry_summary(claim: &Claim, pol: &TolerancePolicy) -> ClaimSummary {
    let mut summary = empty_summary(claim, vec![2]);
    summary.trials = 1;
    let entry = registry::registry()
        .into_iter()
        .find(|e| e.claim_id == claim.id)
        .expect("every registry claim has an entry");
    summary.dims = vec![entry.matrices[0].dim()];
    match registry::verify(&entry, pol) {
        Ok(outcome) => {
            keep_worst(
                &mut summary.worst_residual,
                outcome.result.decisive().map(|c| WorstResidual {
                    check: c.name.clone(),
                    residual: c.check.residual,
                    bound: c.check.bound,
                    dim: summary.dims[0],
                    seed: None,
                }),
            );
            if outcome.matched {
                summary.passes = 1;
            } else {
                summary.status = Status::Fail;
            }
            if let Some(note) = outcome.note {
                summary.notes.push(note.to_string());
            }
            summary.registry = Some(outcome);
        }
        Err(e) => {
            summary.numerical_errors.push(ErrorRecord {
                dim: summary.dims[0],
                seed: None,
                message: e.to_string(),
            });
            summary.status = Status::Fail;
        }
    }
    summary
}

/// Runs every requested claim. Results do not depend on `parallel`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    if cfg.trials == 0 {
        return Err(SuiteError::NoTrials);
    }
    if cfg.dims.is_empty() {
        return Err(SuiteError::NoDims);
    }
    if cfg.dims.contains(&0) {
        return Err(SuiteError::ZeroDim);
    }
    let claims = cfg
        .claims
        .iter()
        .map(|id| find(id).ok_or_else(|| ClaimError::UnknownClaim(id.clone())))
        .collect::<Result<Vec<_>, _>>()?;

    let mut tasks = Vec::new();
    for (ci, claim) in claims.iter().enumerate() {
        if claim.expect == Expectation::AlwaysHolds {
            for dim in claim.effective_dims(&cfg.dims) {
                for t in 0..cfg.trials {
                    tasks.push((ci, dim, cfg.first_trial + t));
                }
            }
        }
    }
    let run = |&(ci, dim, trial): &(usize, usize, u64)| {
        let claim: &Claim = claims[ci];
        let seed = Seed::new(cfg.master_seed, claim_tag(claim.id, dim), trial);
        run_trial(claim, dim, seed, &cfg.pol)
    };
    let outcomes: Vec<Outcome> = if cfg.parallel {
        tasks.par_iter().map(run).collect()
    } else {
        tasks.iter().map(run).collect()
    };

    let mut summaries: Vec<ClaimSummary> = claims
        .iter()
        .map(|c| match c.expect {
            Expectation::AlwaysHolds => empty_summary(c, c.effective_dims(&cfg.dims)),
            Expectation::RegistryViolation => registry_summary(c, &cfg.pol),
        })
        .collect();
    for (&(ci, _, _), outcome) in tasks.iter().zip(outcomes) {
        let s = &mut summaries[ci];
        s.trials += 1;
        match outcome {
            Outcome::Pass(w) => {
                s.passes += 1;
                keep_worst(&mut s.worst_residual, w);
            }
            Outcome::Violation(v, w) => {
                s.violations.push(v);
                keep_worst(&mut s.worst_residual, w);
            }
            Outcome::HypothesisFail => s.hypothesis_failures += 1,
            Outcome::Error(e) => s.numerical_errors.push(e),
        }
    }
    for s in &mut summaries {
        if s.expect == Expectation::AlwaysHolds
            && (!s.violations.is_empty() || !s.numerical_errors.is_empty())
        {
            s.status = Status::Fail;
        }
    }
    let verdict = if summaries.iter().all(|s| s.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(SuiteReport {
        claims: summaries,
        verdict,
    })
}
