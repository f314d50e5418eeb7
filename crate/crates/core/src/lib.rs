//! Operator absolute value `|A| = sqrt(A* A)` on dense complex matrices, and a
//! catalog of checkable identities and inequalities built on it.
//!
//! The layers, bottom-up:
//!
//! - [`matrix`]: dense square complex matrices and their arithmetic.
//! - [`eigen`]: Hermitian eigendecomposition (cyclic Jacobi).
//! - [`calculus`]: PSD square roots, fractional powers, `|A|`, Löwner order.
//! - [`predicates`]: self-adjoint, normal, hyponormal, positive, commuting.
//! - [`generators`]: seeded ensembles satisfying claim hypotheses by
//!   construction.
//! - [`claims`]: the claim catalog, the counterexample registry and the suite
//!   runner.

pub mod calculus;
pub mod claims;
pub mod eigen;
pub mod error;
pub mod generators;
mod lu;
pub mod matrix;
pub mod predicates;
pub mod tolerance;

pub use calculus::{
    abs_value, inverse, loewner_leq, psd_power, psd_sqrt, psd_sqrt_iterative, LoewnerVerdict,
    PsdMatrix,
};
pub use eigen::{hermitian_eigen, HermitianEigen};
pub use error::{LinalgError, Result};
pub use generators::{EnsembleKind, EnsembleSpec, Seed};
pub use matrix::ComplexMatrix;
pub use predicates::{Check, ClassReport};
pub use tolerance::TolerancePolicy;
