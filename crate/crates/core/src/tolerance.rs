use serde::{Deserialize, Serialize};

use crate::error::{LinalgError, Result};

/// Relative and absolute thresholds shared by every approximate comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    pub rel: f64,
    pub abs: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

impl TolerancePolicy {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if rel > 0.0 && abs > 0.0 && rel.is_finite() && abs.is_finite() {
            Ok(Self { rel, abs })
        } else {
            Err(LinalgError::InvalidTolerance { rel, abs })
        }
    }

    /// Policy used by the claim suites.
    pub fn suite() -> Self {
        Self {
            rel: 1e-8,
            abs: 1e-12,
        }
    }

    /// `rel * max(1, scale) + abs`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.rel * scale.max(1.0) + self.abs
    }
}
