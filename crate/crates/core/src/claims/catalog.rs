//! The claim catalog.

use std::sync::LazyLock;

use crate::calculus::{psd_power, psd_sqrt, PsdMatrix};
use crate::error::Result;
use crate::generators::EnsembleKind as E;
use crate::matrix::ComplexMatrix;
use crate::predicates::{self, Check};
use crate::tolerance::TolerancePolicy;

use super::checks::{abs, inv, Checks, NamedCheck};
use super::Expectation::{AlwaysHolds, RegistryViolation};
use super::{Claim, Expectation};

type M = ComplexMatrix;
type P = TolerancePolicy;
type Out = Result<Vec<NamedCheck>>;

const PAIR: &[&str] = &["A", "B"];
const ONE_T: &[&str] = &["T"];
const ONE_A: &[&str] = &["A"];
const TRIPLE: &[&str] = &["A1", "A2", "A3"];
const FAMILY: &[&str] = &["A1", "A2", "A3", "A4"];
const SANDWICH: &[&str] = &["S", "T"];

const HYPONORMAL_NOTE: &str =
    "hyponormal slots are sampled normal: in finite dimension the self-commutator \
     has trace zero, so a PSD self-commutator vanishes and hyponormal coincides with normal; \
     the hyponormal predicate is still evaluated";

static CATALOG: LazyLock<Vec<Claim>> = LazyLock::new(build);

/// All claims, theorem claims first, then the registry counterexamples.
pub fn catalog() -> &'static [Claim] {
    &CATALOG
}

pub fn find(id: &str) -> Option<&'static Claim> {
    CATALOG.iter().find(|c| c.id == id)
}

#[allow(clippy::too_many_arguments)]
fn claim(
    id: &'static str,
    description: &'static str,
    statement: &'static str,
    slots: &'static [&'static str],
    arity: (usize, usize),
    hypothesis: super::Evaluator,
    conclusion: super::Evaluator,
    ensembles: &'static [E],
    expect: Expectation,
) -> Claim {
    Claim {
        id,
        description,
        statement,
        slots,
        arity,
        hypothesis,
        conclusion,
        ensembles,
        invertible: false,
        fixed_dims: None,
        expect,
        notes: &[],
    }
}

fn build() -> Vec<Claim> {
    let fixed_two: &'static [usize] = &[2];
    vec![
        claim(
            "L-SQRT-PROD",
            "product of commuting positive operators is positive",
            "AB=BA, A>=0, B>=0 => AB>=0",
            PAIR,
            (2, 2),
            hyp_commuting_positive,
            concl_sqrt_prod,
            &[E::CommutingPositivePair],
            AlwaysHolds,
        ),
        claim(
            "L-SQRT-FACTOR",
            "square root of a commuting positive product factors",
            "AB=BA, A>=0, B>=0 => sqrt(AB) = sqrt(A) sqrt(B)",
            PAIR,
            (2, 2),
            hyp_commuting_positive,
            concl_sqrt_factor,
            &[E::CommutingPositivePair],
            AlwaysHolds,
        ),
        claim(
            "L-SQRT-SUM",
            "square root is subadditive on commuting positive pairs",
            "AB=BA, A>=0, B>=0 => sqrt(A+B) <= sqrt(A) + sqrt(B)",
            PAIR,
            (2, 2),
            hyp_commuting_positive,
            concl_sqrt_sum,
            &[E::CommutingPositivePair],
            AlwaysHolds,
        ),
        claim(
            "T-LH",
            "Löwner–Heinz: fractional powers preserve order",
            "A>=B>=0 => A^a >= B^a for a in {0.25, 0.5, 0.75}",
            PAIR,
            (2, 2),
            hyp_ordered,
            concl_loewner_heinz,
            &[E::OrderedPsdPair { commuting: false }],
            AlwaysHolds,
        ),
        claim(
            "R-SQMONO",
            "squaring preserves order on commuting positive pairs",
            "A>=B>=0, AB=BA => A^2 >= B^2",
            PAIR,
            (2, 2),
            hyp_ordered_commuting,
            concl_square_monotone,
            &[E::OrderedPsdPair { commuting: true }],
            AlwaysHolds,
        ),
        claim(
            "L-FUG",
            "Fuglede equivalences for a normal operator",
            "A normal => (AB=BA <=> A*B=BA* <=> AB*=B*A <=> A*B*=B*A*)",
            PAIR,
            (2, 2),
            hyp_a_normal,
            concl_fuglede,
            &[E::FugledePair],
            AlwaysHolds,
        ),
        claim(
            "C-ABSCOMM",
            "absolute values commute when one factor is normal",
            "AB=BA, A normal => |A||B| = |B||A|",
            PAIR,
            (2, 2),
            hyp_commuting_a_normal,
            concl_abs_commute,
            &[E::NormalWithPartner],
            AlwaysHolds,
        ),
        Claim {
            fixed_dims: Some(fixed_two),
            ..claim(
                "C-PRODSA",
                "self-adjoint factors with normal product",
                "A, B self-adjoint, AB normal => |AB| = |A||B|",
                PAIR,
                (2, 2),
                hyp_sa_normal_product,
                concl_abs_product,
                &[E::SaPairNormalProduct],
                AlwaysHolds,
            )
        },
        Claim {
            fixed_dims: Some(fixed_two),
            ..claim(
                "C-PRODSA-COR",
                "self-adjoint factors with normal product: |A||B| self-adjoint",
                "A, B self-adjoint, AB normal => |A||B| = |B||A| self-adjoint; A,B>=0 => AB>=0",
                PAIR,
                (2, 2),
                hyp_sa_normal_product,
                concl_prodsa_corollary,
                &[E::SaPairNormalProduct],
                AlwaysHolds,
            )
        },
        claim(
            "C-PRODNORM",
            "absolute value is multiplicative when one commuting factor is normal",
            "AB=BA, A normal => |AB| = |A||B|",
            PAIR,
            (2, 2),
            hyp_commuting_a_normal,
            concl_abs_product,
            &[E::NormalWithPartner],
            AlwaysHolds,
        ),
        claim(
            "C-EIGHT",
            "the eight products of commuting normals share one absolute value",
            "AB=BA, A, B normal => |AB|=|A*B|=|AB*|=|A*B*|=|B*A*|=|B*A|=|BA*|=|BA|",
            PAIR,
            (2, 2),
            hyp_commuting_both_normal,
            concl_eight,
            &[E::CommutingNormalFamily { k: 2 }],
            AlwaysHolds,
        ),
        Claim {
            invertible: true,
            ..claim(
                "C-INV1",
                "multiplicativity with an inverse factor",
                "AB=BA, A normal, B invertible => |AB^-1| = |A||B^-1|",
                PAIR,
                (2, 2),
                hyp_inv1,
                concl_inv1,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        Claim {
            invertible: true,
            ..claim(
                "C-INV2",
                "absolute value of the inverse of a normal operator",
                "A normal, invertible => |A^-1| = |A|^-1",
                ONE_A,
                (1, 1),
                hyp_normal_invertible,
                concl_inv2,
                &[E::Normal],
                AlwaysHolds,
            )
        },
        claim(
            "C-NFOLD",
            "multiplicativity over a commuting family with one non-normal member",
            "A_i pairwise commuting, all but one normal => |A1...Ak| = |A1|...|Ak|",
            FAMILY,
            (3, 4),
            hyp_nfold,
            concl_nfold,
            &[
                E::NormalFamilyWithPartner { k: 3 },
                E::NormalFamilyWithPartner { k: 4 },
            ],
            AlwaysHolds,
        ),
        Claim {
            invertible: true,
            ..claim(
                "C-POWZ",
                "integer powers of a normal invertible operator",
                "A normal, invertible => |A^m| = |A|^m for m in -3..=3",
                ONE_A,
                (1, 1),
                hyp_normal_invertible,
                concl_powz,
                &[E::Normal],
                AlwaysHolds,
            )
        },
        claim(
            "L-ANTI",
            "square of an anti-symmetric operator is negative",
            "A* = -A => A^2 <= 0",
            ONE_A,
            (1, 1),
            hyp_anti,
            concl_anti,
            &[E::AntiSymmetric],
            AlwaysHolds,
        ),
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "L-REPART",
                "real part is dominated by the absolute value",
                "T hyponormal => Re T <= |T|",
                ONE_T,
                (1, 1),
                hyp_t_hyponormal,
                concl_repart,
                &[E::Normal],
                AlwaysHolds,
            )
        },
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "L-HYPROD",
                "A*B is hyponormal for commuting normal A and hyponormal B",
                "AB=BA, A normal, B hyponormal => A*B hyponormal",
                PAIR,
                (2, 2),
                hyp_normal_hypo,
                concl_hyprod,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "C-TRI",
                "triangle inequality for the absolute value",
                "AB=BA, A normal, B hyponormal => |A+B| <= |A| + |B|",
                PAIR,
                (2, 2),
                hyp_normal_hypo,
                concl_tri,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        claim(
            "C-REIM",
            "absolute value against the Cartesian parts",
            "T normal => |T| <= |Re T| + |Im T|",
            ONE_T,
            (1, 1),
            hyp_t_normal,
            concl_reim,
            &[E::Normal],
            AlwaysHolds,
        ),
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "C-TRIMINUS",
                "triangle inequality for a difference",
                "AB=BA, A normal, B hyponormal => |A-B| <= |A| + |B|",
                PAIR,
                (2, 2),
                hyp_normal_hypo,
                concl_triminus,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "C-TRIN",
                "triangle inequality for a commuting triple",
                "A_i pairwise commuting, normal except one hyponormal => |A1+A2+A3| <= |A1|+|A2|+|A3|",
                TRIPLE,
                (3, 3),
                hyp_trin,
                concl_trin,
                &[E::CommutingNormalFamily { k: 3 }],
                AlwaysHolds,
            )
        },
        claim(
            "C-SUMNORM",
            "sum of pairwise commuting normals is normal",
            "A_i pairwise commuting and normal => A1+A2+A3 normal",
            TRIPLE,
            (3, 3),
            hyp_sumnorm,
            concl_sumnorm,
            &[E::CommutingNormalFamily { k: 3 }],
            AlwaysHolds,
        ),
        claim(
            "C-NORMDIFF+",
            "norm of the difference of absolute values against the sum",
            "AB=BA, A, B normal => || |A|-|B| || <= ||A+B||",
            PAIR,
            (2, 2),
            hyp_commuting_both_normal,
            concl_normdiff_plus,
            &[E::CommutingNormalFamily { k: 2 }],
            AlwaysHolds,
        ),
        claim(
            "C-NORMDIFF-",
            "norm of the difference of absolute values against the difference",
            "AB=BA, A, B normal => || |A|-|B| || <= ||A-B||",
            PAIR,
            (2, 2),
            hyp_commuting_both_normal,
            concl_normdiff_minus,
            &[E::CommutingNormalFamily { k: 2 }],
            AlwaysHolds,
        ),
        claim(
            "L-SANDWICH",
            "order sandwich bounds the norm",
            "S>=0, T self-adjoint, -S <= T <= S => ||T|| <= ||S||",
            SANDWICH,
            (2, 2),
            hyp_sandwich,
            concl_sandwich,
            &[E::SandwichPair],
            AlwaysHolds,
        ),
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "C-ABSDIFF-",
                "reverse triangle inequality against the difference",
                "AB=BA, A normal, B hyponormal => ||A|-|B|| <= |A-B|",
                PAIR,
                (2, 2),
                hyp_normal_hypo,
                concl_absdiff_minus,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        Claim {
            notes: &[HYPONORMAL_NOTE],
            ..claim(
                "C-ABSDIFF+",
                "reverse triangle inequality against the sum",
                "AB=BA, A normal, B hyponormal => ||A|-|B|| <= |A+B|",
                PAIR,
                (2, 2),
                hyp_normal_hypo,
                concl_absdiff_plus,
                &[E::CommutingNormalFamily { k: 2 }],
                AlwaysHolds,
            )
        },
        claim(
            "C-NEGCROSS",
            "triangle inequality under a non-positive cross term",
            "AB=BA, A normal, A*B+B*A <= 0 => |A+B| <= |A| + |B|",
            PAIR,
            (2, 2),
            hyp_negcross,
            concl_tri,
            &[E::NegativeCrossPair],
            AlwaysHolds,
        ),
        // Registry counterexamples. Hypotheses list what each instance does
        // satisfy; the conclusion is the identity it refutes.
        registry_claim(
            "CE-0",
            "commuting pair whose absolute values do not commute",
            "AB=BA but |A||B| != |B||A| (neither factor normal)",
            hyp_ce0,
            concl_abs_commute,
        ),
        registry_claim(
            "CE-1",
            "self-adjoint pair with non-normal product",
            "A, B self-adjoint, AB not normal, |AB| != |A||B|",
            hyp_ce1,
            concl_abs_product,
        ),
        registry_claim(
            "CE-2",
            "non-normal pair with self-adjoint product",
            "AB self-adjoint, A and B not normal, |AB| != |A||B|",
            hyp_ce2,
            concl_abs_product,
        ),
        Claim {
            slots: ONE_A,
            arity: (1, 1),
            ..registry_claim(
                "CE-3",
                "absolute value of a square",
                "A not normal, |A^2| != |A|^2",
                hyp_none,
                concl_abs_square,
            )
        },
        registry_claim(
            "CE-4",
            "triangle inequality fails for non-commuting self-adjoint pair",
            "A, B self-adjoint, AB != BA, |A+B| </= |A| + |B|",
            hyp_ce4,
            concl_tri,
        ),
    ]
}

fn registry_claim(
    id: &'static str,
    description: &'static str,
    statement: &'static str,
    hypothesis: super::Evaluator,
    conclusion: super::Evaluator,
) -> Claim {
    claim(
        id,
        description,
        statement,
        PAIR,
        (2, 2),
        hypothesis,
        conclusion,
        &[],
        RegistryViolation,
    )
}

// ---- hypotheses ----

fn hyp_commuting_positive(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.positive("A>=0", &m[0]).positive("B>=0", &m[1]);
    Ok(c.finish())
}

fn hyp_ordered(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.positive("B>=0", &m[1]).leq("B<=A", &m[1], &m[0])?;
    Ok(c.finish())
}

fn hyp_ordered_commuting(m: &[M], pol: &P) -> Out {
    let mut out = hyp_ordered(m, pol)?;
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    out.extend(c.finish());
    Ok(out)
}

fn hyp_a_normal(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol).normal("A normal", &m[0]).finish())
}

fn hyp_t_normal(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol).normal("T normal", &m[0]).finish())
}

fn hyp_t_hyponormal(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol).hyponormal("T hyponormal", &m[0]).finish())
}

fn hyp_commuting_a_normal(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.normal("A normal", &m[0]);
    Ok(c.finish())
}

fn hyp_commuting_both_normal(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.normal("A normal", &m[0]).normal("B normal", &m[1]);
    Ok(c.finish())
}

fn hyp_normal_hypo(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.normal("A normal", &m[0])
        .hyponormal("B hyponormal", &m[1]);
    Ok(c.finish())
}

fn hyp_sa_normal_product(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.self_adjoint("A self-adjoint", &m[0])
        .self_adjoint("B self-adjoint", &m[1])
        .normal("AB normal", &(&m[0] * &m[1]));
    Ok(c.finish())
}

fn hyp_inv1(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.normal("A normal", &m[0])
        .invertible("B invertible", &m[1]);
    Ok(c.finish())
}

fn hyp_normal_invertible(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.normal("A normal", &m[0])
        .invertible("A invertible", &m[0]);
    Ok(c.finish())
}

fn hyp_nfold(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.pairwise_commute(FAMILY, m)?;
    c.at_most_non_normal("all but one normal", m, 1);
    Ok(c.finish())
}

fn hyp_anti(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol).anti_symmetric("A*=-A", &m[0]).finish())
}

fn hyp_trin(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.pairwise_commute(TRIPLE, m)?;
    for (slot, a) in TRIPLE.iter().zip(m) {
        c.hyponormal(format!("{slot} hyponormal"), a);
    }
    c.at_most_non_normal("normal except one", m, 1);
    Ok(c.finish())
}

fn hyp_sumnorm(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.pairwise_commute(TRIPLE, m)?;
    for (slot, a) in TRIPLE.iter().zip(m) {
        c.normal(format!("{slot} normal"), a);
    }
    Ok(c.finish())
}

fn hyp_sandwich(m: &[M], pol: &P) -> Out {
    let (s, t) = (&m[0], &m[1]);
    let mut c = Checks::new(pol);
    c.positive("S>=0", s).self_adjoint("T self-adjoint", t);
    c.leq("-S<=T", &-s, t)?.leq("T<=S", t, s)?;
    Ok(c.finish())
}

fn cross_term(a: &M, b: &M) -> M {
    &(&a.adjoint() * b) + &(&b.adjoint() * a)
}

fn hyp_negcross(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.commute("AB=BA", &m[0], &m[1])?;
    c.normal("A normal", &m[0]);
    let cross = cross_term(&m[0], &m[1]);
    c.leq("A*B+B*A<=0", &cross, &M::zeros(cross.dim()))?;
    Ok(c.finish())
}

fn hyp_ce0(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol).commute("AB=BA", &m[0], &m[1])?.finish())
}

fn hyp_ce1(m: &[M], pol: &P) -> Out {
    let mut c = Checks::new(pol);
    c.self_adjoint("A self-adjoint", &m[0])
        .self_adjoint("B self-adjoint", &m[1]);
    Ok(c.finish())
}

fn hyp_ce2(m: &[M], pol: &P) -> Out {
    let ab = &m[0] * &m[1];
    let mut c = Checks::new(pol);
    c.normal("AB normal", &ab)
        .self_adjoint("AB self-adjoint", &ab);
    Ok(c.finish())
}

fn hyp_none(_: &[M], _: &P) -> Out {
    Ok(Vec::new())
}

fn hyp_ce4(m: &[M], pol: &P) -> Out {
    hyp_ce1(m, pol)
}

// ---- conclusions ----

fn psd(m: &M, pol: &P) -> Result<PsdMatrix> {
    PsdMatrix::new(m, pol)
}

fn sqrt(m: &M, pol: &P) -> Result<M> {
    Ok(psd_sqrt(&psd(m, pol)?).into_matrix())
}

fn concl_sqrt_prod(m: &[M], pol: &P) -> Out {
    Ok(Checks::new(pol)
        .positive("AB>=0", &(&m[0] * &m[1]))
        .finish())
}

fn concl_sqrt_factor(m: &[M], pol: &P) -> Out {
    let lhs = sqrt(&(&m[0] * &m[1]), pol)?;
    let rhs = &sqrt(&m[0], pol)? * &sqrt(&m[1], pol)?;
    Ok(Checks::new(pol)
        .eq("sqrt(AB)=sqrt(A)sqrt(B)", &lhs, &rhs)
        .finish())
}

fn concl_sqrt_sum(m: &[M], pol: &P) -> Out {
    let lhs = sqrt(&(&m[0] + &m[1]), pol)?;
    let rhs = &sqrt(&m[0], pol)? + &sqrt(&m[1], pol)?;
    Ok(Checks::new(pol)
        .leq("sqrt(A+B)<=sqrt(A)+sqrt(B)", &lhs, &rhs)?
        .finish())
}

pub(crate) const LH_EXPONENTS: [f64; 3] = [0.25, 0.5, 0.75];

fn concl_loewner_heinz(m: &[M], pol: &P) -> Out {
    let a = psd(&m[0], pol)?;
    let b = psd(&m[1], pol)?;
    let mut c = Checks::new(pol);
    for alpha in LH_EXPONENTS {
        let pa = psd_power(&a, alpha)?;
        let pb = psd_power(&b, alpha)?;
        c.leq(format!("B^{alpha}<=A^{alpha}"), pb.matrix(), pa.matrix())?;
    }
    Ok(c.finish())
}

fn concl_square_monotone(m: &[M], pol: &P) -> Out {
    let a2 = &m[0] * &m[0];
    let b2 = &m[1] * &m[1];
    Ok(Checks::new(pol).leq("B^2<=A^2", &b2, &a2)?.finish())
}

fn concl_fuglede(m: &[M], pol: &P) -> Out {
    let (a, b) = (&m[0], &m[1]);
    let (a_adj, b_adj) = (a.adjoint(), b.adjoint());
    let base = predicates::commutes(a, b, pol)?;
    let variants = [
        ("A*B=BA*", predicates::commutes(&a_adj, b, pol)?),
        ("AB*=B*A", predicates::commutes(a, &b_adj, pol)?),
        ("A*B*=B*A*", predicates::commutes(&a_adj, &b_adj, pol)?),
    ];
    let mut c = Checks::new(pol);
    for (name, v) in variants {
        let disagree = if v.holds == base.holds { 0.0 } else { 1.0 };
        c.push(format!("AB=BA<=>{name}"), Check::new(disagree, 0.0));
    }
    Ok(c.finish())
}

fn concl_abs_commute(m: &[M], pol: &P) -> Out {
    let (aa, ab) = (abs(&m[0], pol)?, abs(&m[1], pol)?);
    Ok(Checks::new(pol)
        .eq("|A||B|=|B||A|", &(&aa * &ab), &(&ab * &aa))
        .finish())
}

fn concl_abs_product(m: &[M], pol: &P) -> Out {
    let lhs = abs(&(&m[0] * &m[1]), pol)?;
    let rhs = &abs(&m[0], pol)? * &abs(&m[1], pol)?;
    Ok(Checks::new(pol).eq("|AB|=|A||B|", &lhs, &rhs).finish())
}

fn concl_prodsa_corollary(m: &[M], pol: &P) -> Out {
    let (a, b) = (&m[0], &m[1]);
    let (aa, ab) = (abs(a, pol)?, abs(b, pol)?);
    let prod = &aa * &ab;
    let mut c = Checks::new(pol);
    c.self_adjoint("|A||B| self-adjoint", &prod)
        .eq("|A||B|=|B||A|", &prod, &(&ab * &aa));
    let both_positive =
        predicates::is_positive(a, pol).holds && predicates::is_positive(b, pol).holds;
    if both_positive {
        c.positive("A,B>=0 => AB>=0", &(a * b));
    } else {
        c.push("A,B>=0 => AB>=0", Check::new(0.0, 0.0));
    }
    Ok(c.finish())
}

fn concl_eight(m: &[M], pol: &P) -> Out {
    let (a, b) = (&m[0], &m[1]);
    let (a_adj, b_adj) = (a.adjoint(), b.adjoint());
    let reference = abs(&(a * b), pol)?;
    let others: [(&str, M); 7] = [
        ("|AB|=|A*B|", &a_adj * b),
        ("|AB|=|AB*|", a * &b_adj),
        ("|AB|=|A*B*|", &a_adj * &b_adj),
        ("|AB|=|B*A*|", &b_adj * &a_adj),
        ("|AB|=|B*A|", &b_adj * a),
        ("|AB|=|BA*|", b * &a_adj),
        ("|AB|=|BA|", b * a),
    ];
    let mut c = Checks::new(pol);
    for (name, p) in others {
        c.eq(name, &reference, &abs(&p, pol)?);
    }
    Ok(c.finish())
}

fn concl_inv1(m: &[M], pol: &P) -> Out {
    let b_inv = inv(&m[1])?;
    let lhs = abs(&(&m[0] * &b_inv), pol)?;
    let rhs = &abs(&m[0], pol)? * &abs(&b_inv, pol)?;
    Ok(Checks::new(pol)
        .eq("|AB^-1|=|A||B^-1|", &lhs, &rhs)
        .finish())
}

fn concl_inv2(m: &[M], pol: &P) -> Out {
    let a = &m[0];
    let n = a.dim();
    let abs_inv = abs(&inv(a)?, pol)?;
    let prod = &abs_inv * &abs(a, pol)?;
    let kappa = crate::calculus::condition_number(a);
    let bound = pol.bound(kappa * (n as f64).sqrt());
    let residual = prod.distance(&M::identity(n));
    Ok(Checks::new(pol)
        .push("|A^-1||A|=I", Check::new(residual, bound))
        .finish())
}

pub(crate) const POWERS: std::ops::RangeInclusive<i32> = -3..=3;

fn concl_powz(m: &[M], pol: &P) -> Out {
    let a = &m[0];
    let abs_a = abs(a, pol)?;
    let a_inv = inv(a)?;
    let abs_a_inv = inv(&abs_a)?;
    let mut c = Checks::new(pol);
    for p in POWERS {
        let e = p.unsigned_abs();
        let (lhs_base, rhs_base) = if p < 0 {
            (&a_inv, &abs_a_inv)
        } else {
            (a, &abs_a)
        };
        let lhs = abs(&lhs_base.pow(e), pol)?;
        let rhs = rhs_base.pow(e);
        c.eq(format!("|A^{p}|=|A|^{p}"), &lhs, &rhs);
    }
    Ok(c.finish())
}

fn concl_nfold(m: &[M], pol: &P) -> Out {
    let n = m[0].dim();
    let mut prod = M::identity(n);
    let mut abs_prod = M::identity(n);
    for a in m {
        prod = &prod * a;
        abs_prod = &abs_prod * &abs(a, pol)?;
    }
    let lhs = abs(&prod, pol)?;
    Ok(Checks::new(pol)
        .eq("|A1...Ak|=|A1|...|Ak|", &lhs, &abs_prod)
        .finish())
}

fn concl_anti(m: &[M], pol: &P) -> Out {
    let sq = &m[0] * &m[0];
    Ok(Checks::new(pol)
        .leq("A^2<=0", &sq, &M::zeros(sq.dim()))?
        .finish())
}

fn concl_repart(m: &[M], pol: &P) -> Out {
    let t = &m[0];
    Ok(Checks::new(pol)
        .leq("Re T<=|T|", &t.hermitian_part(), &abs(t, pol)?)?
        .finish())
}

fn concl_hyprod(m: &[M], pol: &P) -> Out {
    let p = &m[0].adjoint() * &m[1];
    Ok(Checks::new(pol).hyponormal("A*B hyponormal", &p).finish())
}

fn concl_tri(m: &[M], pol: &P) -> Out {
    let lhs = abs(&(&m[0] + &m[1]), pol)?;
    let rhs = &abs(&m[0], pol)? + &abs(&m[1], pol)?;
    Ok(Checks::new(pol).leq("|A+B|<=|A|+|B|", &lhs, &rhs)?.finish())
}

fn concl_triminus(m: &[M], pol: &P) -> Out {
    let lhs = abs(&(&m[0] - &m[1]), pol)?;
    let rhs = &abs(&m[0], pol)? + &abs(&m[1], pol)?;
    Ok(Checks::new(pol).leq("|A-B|<=|A|+|B|", &lhs, &rhs)?.finish())
}

fn concl_reim(m: &[M], pol: &P) -> Out {
    let t = &m[0];
    let lhs = abs(t, pol)?;
    let rhs = &abs(&t.hermitian_part(), pol)? + &abs(&t.skew_part(), pol)?;
    Ok(Checks::new(pol)
        .leq("|T|<=|Re T|+|Im T|", &lhs, &rhs)?
        .finish())
}

fn concl_trin(m: &[M], pol: &P) -> Out {
    let n = m[0].dim();
    let mut sum = M::zeros(n);
    let mut abs_sum = M::zeros(n);
    for a in m {
        sum = &sum + a;
        abs_sum = &abs_sum + &abs(a, pol)?;
    }
    Ok(Checks::new(pol)
        .leq("|A1+A2+A3|<=|A1|+|A2|+|A3|", &abs(&sum, pol)?, &abs_sum)?
        .finish())
}

fn concl_sumnorm(m: &[M], pol: &P) -> Out {
    let n = m[0].dim();
    let sum = m.iter().fold(M::zeros(n), |acc, a| &acc + a);
    Ok(Checks::new(pol).normal("A1+A2+A3 normal", &sum).finish())
}

fn abs_difference(m: &[M], pol: &P) -> Result<M> {
    Ok(&abs(&m[0], pol)? - &abs(&m[1], pol)?)
}

fn concl_normdiff(m: &[M], pol: &P, plus: bool) -> Out {
    let (a, b) = (&m[0], &m[1]);
    let lhs = abs_difference(m, pol)?.operator_norm();
    let (name, rhs) = if plus {
        ("|| |A|-|B| ||<=||A+B||", (a + b).operator_norm())
    } else {
        ("|| |A|-|B| ||<=||A-B||", (a - b).operator_norm())
    };
    let scale = a.operator_norm().max(b.operator_norm());
    Ok(Checks::new(pol).norm_leq(name, lhs, rhs, scale).finish())
}

fn concl_normdiff_plus(m: &[M], pol: &P) -> Out {
    concl_normdiff(m, pol, true)
}

fn concl_normdiff_minus(m: &[M], pol: &P) -> Out {
    concl_normdiff(m, pol, false)
}

fn concl_sandwich(m: &[M], pol: &P) -> Out {
    let (s, t) = (&m[0], &m[1]);
    let (ns, nt) = (s.operator_norm(), t.operator_norm());
    Ok(Checks::new(pol)
        .norm_leq("||T||<=||S||", nt, ns, ns.max(nt))
        .finish())
}

fn concl_absdiff(m: &[M], pol: &P, plus: bool) -> Out {
    let lhs = abs(&abs_difference(m, pol)?, pol)?;
    let (name, other) = if plus {
        ("||A|-|B||<=|A+B|", &m[0] + &m[1])
    } else {
        ("||A|-|B||<=|A-B|", &m[0] - &m[1])
    };
    Ok(Checks::new(pol)
        .leq(name, &lhs, &abs(&other, pol)?)?
        .finish())
}

fn concl_absdiff_minus(m: &[M], pol: &P) -> Out {
    concl_absdiff(m, pol, false)
}

fn concl_absdiff_plus(m: &[M], pol: &P) -> Out {
    concl_absdiff(m, pol, true)
}

fn concl_abs_square(m: &[M], pol: &P) -> Out {
    let a = &m[0];
    let lhs = abs(&(a * a), pol)?;
    let abs_a = abs(a, pol)?;
    Ok(Checks::new(pol)
        .eq("|A^2|=|A|^2", &lhs, &(&abs_a * &abs_a))
        .finish())
}
