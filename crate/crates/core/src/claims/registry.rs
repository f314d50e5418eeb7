//! Fixed counterexamples with their expected structure.

use serde::Serialize;

use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::predicates;
use crate::tolerance::TolerancePolicy;

use super::checks::abs;
use super::{check_claim, ClaimError, ClaimInstance, ClaimResult, Verdict};

/// Tolerance for comparing computed values against the stored ones.
pub const VALUE_TOLERANCE: f64 = 1e-10;

/// A structural property of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Flag {
    #[serde(rename = "AB=BA")]
    Commutes,
    #[serde(rename = "A normal")]
    ANormal,
    #[serde(rename = "B normal")]
    BNormal,
    #[serde(rename = "A self-adjoint")]
    ASelfAdjoint,
    #[serde(rename = "B self-adjoint")]
    BSelfAdjoint,
    #[serde(rename = "AB normal")]
    ProductNormal,
    #[serde(rename = "AB self-adjoint")]
    ProductSelfAdjoint,
}

impl Flag {
    fn evaluate(self, m: &[ComplexMatrix], pol: &TolerancePolicy) -> Result<bool> {
        let product = || &m[0] * &m[1];
        Ok(match self {
            Flag::Commutes => predicates::commutes(&m[0], &m[1], pol)?.holds,
            Flag::ANormal => predicates::is_normal(&m[0], pol).holds,
            Flag::BNormal => predicates::is_normal(&m[1], pol).holds,
            Flag::ASelfAdjoint => predicates::is_self_adjoint(&m[0], pol).holds,
            Flag::BSelfAdjoint => predicates::is_self_adjoint(&m[1], pol).holds,
            Flag::ProductNormal => predicates::is_normal(&product(), pol).holds,
            Flag::ProductSelfAdjoint => predicates::is_self_adjoint(&product(), pol).holds,
        })
    }
}

/// A derived matrix recorded for an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    #[serde(rename = "|A|")]
    AbsA,
    #[serde(rename = "|B|")]
    AbsB,
    #[serde(rename = "|AB|")]
    AbsProduct,
    #[serde(rename = "|A||B|")]
    ProductOfAbs,
    #[serde(rename = "|B||A|")]
    ReversedProductOfAbs,
    #[serde(rename = "|A^2|")]
    AbsSquare,
    #[serde(rename = "|A|^2")]
    SquareOfAbs,
    #[serde(rename = "|A+B|")]
    AbsSum,
    #[serde(rename = "|A|+|B|")]
    SumOfAbs,
}

impl Quantity {
    pub fn evaluate(self, m: &[ComplexMatrix], pol: &TolerancePolicy) -> Result<ComplexMatrix> {
        let a = &m[0];
        Ok(match self {
            Quantity::AbsA => abs(a, pol)?,
            Quantity::AbsB => abs(&m[1], pol)?,
            Quantity::AbsProduct => abs(&(a * &m[1]), pol)?,
            Quantity::ProductOfAbs => &abs(a, pol)? * &abs(&m[1], pol)?,
            Quantity::ReversedProductOfAbs => &abs(&m[1], pol)? * &abs(a, pol)?,
            Quantity::AbsSquare => abs(&(a * a), pol)?,
            Quantity::SquareOfAbs => {
                let x = abs(a, pol)?;
                &x * &x
            }
            Quantity::AbsSum => abs(&(a + &m[1]), pol)?,
            Quantity::SumOfAbs => &abs(a, pol)? + &abs(&m[1], pol)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegistryEntry {
    pub claim_id: &'static str,
    pub matrices: Vec<ComplexMatrix>,
    pub flags: Vec<(Flag, bool)>,
    pub values: Vec<(Quantity, ComplexMatrix)>,
    /// Pairs of quantities that must differ.
    pub unequal: Vec<(Quantity, Quantity)>,
    /// Values quoted elsewhere for this instance that direct computation
    /// does not reproduce. Reported, never asserted.
    pub quoted: Vec<(Quantity, ComplexMatrix)>,
    pub note: Option<&'static str>,
}

impl RegistryEntry {
    pub fn instance(&self) -> ClaimInstance {
        ClaimInstance {
            claim_id: self.claim_id.to_string(),
            matrices: self.matrices.clone(),
            seed: None,
        }
    }
}

fn real(rows: [[f64; 2]; 2]) -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[rows[0][0], rows[0][1], rows[1][0], rows[1][1]])
        .expect("finite 2x2 literal")
}

fn diag(a: f64, b: f64) -> ComplexMatrix {
    ComplexMatrix::real_diagonal(&[a, b])
}

/// The five counterexamples.
pub fn registry() -> Vec<RegistryEntry> {
    use Flag::*;
    use Quantity::*;
    let s2 = std::f64::consts::SQRT_2;
    vec![
        RegistryEntry {
            claim_id: "CE-0",
            matrices: vec![
                real([[1.0, 1.0], [0.0, 1.0]]),
                real([[0.0, 1.0], [0.0, 0.0]]),
            ],
            flags: vec![(Commutes, true), (ANormal, false), (BNormal, false)],
            values: vec![],
            unequal: vec![(ProductOfAbs, ReversedProductOfAbs)],
            quoted: vec![],
            note: None,
        },
        RegistryEntry {
            claim_id: "CE-1",
            matrices: vec![diag(2.0, -1.0), real([[0.0, 1.0], [1.0, 0.0]])],
            flags: vec![
                (ASelfAdjoint, true),
                (BSelfAdjoint, true),
                (Commutes, false),
                (ProductNormal, false),
            ],
            values: vec![
                (AbsA, diag(2.0, 1.0)),
                (AbsB, diag(1.0, 1.0)),
                (AbsProduct, diag(1.0, 2.0)),
                (ProductOfAbs, diag(2.0, 1.0)),
            ],
            unequal: vec![(AbsProduct, ProductOfAbs)],
            quoted: vec![],
            note: None,
        },
        RegistryEntry {
            claim_id: "CE-2",
            matrices: vec![
                real([[0.0, 1.0], [2.0, 0.0]]),
                real([[0.0, 2.0], [1.0, 0.0]]),
            ],
            flags: vec![
                (ANormal, false),
                (BNormal, false),
                (ProductNormal, true),
                (ProductSelfAdjoint, true),
            ],
            values: vec![
                (AbsA, diag(2.0, 1.0)),
                (AbsB, diag(1.0, 2.0)),
                (AbsProduct, diag(1.0, 4.0)),
                (ProductOfAbs, diag(2.0, 2.0)),
            ],
            unequal: vec![(AbsProduct, ProductOfAbs)],
            quoted: vec![(AbsProduct, diag(1.0, 2.0))],
            note: Some(
                "commonly quoted value |AB| = diag(1, 2) disagrees with direct computation: \
                 AB = diag(1, 4) is already positive, so |AB| = diag(1, 4); \
                 the computed value is stored and still differs from |A||B| = diag(2, 2)",
            ),
        },
        RegistryEntry {
            claim_id: "CE-3",
            matrices: vec![real([[0.0, 2.0], [1.0, 0.0]])],
            flags: vec![],
            values: vec![(AbsSquare, diag(2.0, 2.0)), (SquareOfAbs, diag(1.0, 4.0))],
            unequal: vec![(AbsSquare, SquareOfAbs)],
            quoted: vec![(AbsSquare, diag(s2, s2)), (SquareOfAbs, diag(2.0, 1.0))],
            note: Some(
                "commonly quoted values |A^2| = diag(sqrt2, sqrt2) and |A|^2 = diag(2, 1) \
                 disagree with direct computation (A^2 = 2I, A*A = diag(1, 4)); \
                 the computed values are stored",
            ),
        },
        RegistryEntry {
            claim_id: "CE-4",
            matrices: vec![real([[-1.0, 1.0], [1.0, -1.0]]), diag(2.0, 0.0)],
            flags: vec![
                (ASelfAdjoint, true),
                (BSelfAdjoint, true),
                (Commutes, false),
            ],
            values: vec![
                (AbsSum, diag(s2, s2)),
                (SumOfAbs, real([[3.0, -1.0], [-1.0, 1.0]])),
            ],
            unequal: vec![],
            quoted: vec![],
            note: None,
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlagOutcome {
    pub flag: Flag,
    pub expected: bool,
    pub actual: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueOutcome {
    pub quantity: Quantity,
    pub expected: ComplexMatrix,
    pub actual: ComplexMatrix,
    pub residual: f64,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityOutcome {
    pub left: Quantity,
    pub right: Quantity,
    pub distance: f64,
    pub distinct: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegistryOutcome {
    pub claim_id: String,
    /// Every flag, value and inequality agrees, and the claim is violated.
    pub matched: bool,
    pub result: ClaimResult,
    pub flags: Vec<FlagOutcome>,
    pub values: Vec<ValueOutcome>,
    pub unequal: Vec<InequalityOutcome>,
    /// Quoted values compared against the computed ones; `matched` is
    /// expected to be false here.
    pub quoted: Vec<ValueOutcome>,
    pub note: Option<&'static str>,
}

fn compare(
    q: Quantity,
    expected: &ComplexMatrix,
    m: &[ComplexMatrix],
    pol: &TolerancePolicy,
) -> Result<ValueOutcome> {
    let actual = q.evaluate(m, pol)?;
    let residual = actual.distance(expected);
    Ok(ValueOutcome {
        quantity: q,
        expected: expected.clone(),
        residual,
        matched: residual <= VALUE_TOLERANCE * expected.frobenius_norm().max(1.0),
        actual,
    })
}

/// Checks an entry's recorded structure against computation under `pol`.
pub fn verify(
    entry: &RegistryEntry,
    pol: &TolerancePolicy,
) -> std::result::Result<RegistryOutcome, ClaimError> {
    let numerical = |source| ClaimError::Numerical {
        id: entry.claim_id.to_string(),
        source,
    };
    let m = &entry.matrices;
    let result = check_claim(&entry.instance(), pol)?;

    let mut flags = Vec::with_capacity(entry.flags.len());
    for &(flag, expected) in &entry.flags {
        let actual = flag.evaluate(m, pol).map_err(numerical)?;
        flags.push(FlagOutcome {
            flag,
            expected,
            actual,
        });
    }
    let values = entry
        .values
        .iter()
        .map(|(q, e)| compare(*q, e, m, pol))
        .collect::<Result<Vec<_>>>()
        .map_err(numerical)?;
    let quoted = entry
        .quoted
        .iter()
        .map(|(q, e)| compare(*q, e, m, pol))
        .collect::<Result<Vec<_>>>()
        .map_err(numerical)?;
    let mut unequal = Vec::with_capacity(entry.unequal.len());
    for &(left, right) in &entry.unequal {
        let l = left.evaluate(m, pol).map_err(numerical)?;
        let r = right.evaluate(m, pol).map_err(numerical)?;
        let distance = l.distance(&r);
        unequal.push(InequalityOutcome {
            left,
            right,
            distance,
            distinct: !l.approx_eq(&r, pol),
        });
    }

    let matched = result.verdict == Verdict::Violation
        && flags.iter().all(|f| f.expected == f.actual)
        && values.iter().all(|v| v.matched)
        && unequal.iter().all(|u| u.distinct);
    Ok(RegistryOutcome {
        claim_id: entry.claim_id.to_string(),
        matched,
        result,
        flags,
        values,
        unequal,
        quoted,
        note: entry.note,
    })
}
