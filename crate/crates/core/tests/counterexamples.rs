//! The fixed 2x2 instances, checked entry by entry.

use modulus_core::claims::{check_claim, ClaimInstance, Verdict};
use modulus_core::{abs_value, predicates, psd_sqrt, ComplexMatrix, PsdMatrix, TolerancePolicy};

fn real(entries: [f64; 4]) -> ComplexMatrix {
    ComplexMatrix::from_real(2, &entries).unwrap()
}

fn abs(m: &ComplexMatrix) -> ComplexMatrix {
    abs_value(m, &TolerancePolicy::default())
        .unwrap()
        .into_matrix()
}

fn close(x: &ComplexMatrix, y: &ComplexMatrix) -> bool {
    x.distance(y) <= 1e-12
}

fn instance(id: &str, mats: Vec<ComplexMatrix>) -> ClaimInstance {
    ClaimInstance {
        claim_id: id.to_string(),
        matrices: mats,
        seed: None,
    }
}

#[test]
fn commuting_upper_triangular_pair() {
    let a = real([1.0, 1.0, 0.0, 1.0]);
    let b = real([0.0, 1.0, 0.0, 0.0]);
    assert_eq!(&a * &b, real([0.0, 1.0, 0.0, 0.0]));
    assert_eq!(&a * &b, &b * &a);
    let pol = TolerancePolicy::default();
    assert!(predicates::commutes(&a, &b, &pol).unwrap().holds);
    assert!(!predicates::is_normal(&a, &pol).holds);
    let (aa, ab) = (abs(&a), abs(&b));
    assert!(!close(&(&aa * &ab), &(&ab * &aa)));
}

#[test]
fn self_adjoint_pair_with_non_normal_product() {
    let a = ComplexMatrix::real_diagonal(&[2.0, -1.0]);
    let b = real([0.0, 1.0, 1.0, 0.0]);
    let ab = &a * &b;
    assert_eq!(ab, real([0.0, 2.0, -1.0, 0.0]));
    assert_eq!(&b * &a, real([0.0, -1.0, 2.0, 0.0]));
    let pol = TolerancePolicy::default();
    assert!(predicates::is_self_adjoint(&a, &pol).holds);
    assert!(!predicates::is_normal(&ab, &pol).holds);
    assert!(close(&abs(&a), &ComplexMatrix::real_diagonal(&[2.0, 1.0])));
    assert!(close(&abs(&b), &ComplexMatrix::identity(2)));
    assert!(close(&abs(&ab), &ComplexMatrix::real_diagonal(&[1.0, 2.0])));
    assert!(!close(&abs(&ab), &(&abs(&a) * &abs(&b))));
}

#[test]
fn non_normal_pair_with_self_adjoint_product() {
    let a = real([0.0, 1.0, 2.0, 0.0]);
    let b = real([0.0, 2.0, 1.0, 0.0]);
    assert_eq!(a.adjoint(), b);
    let ab = &a * &b;
    assert_eq!(ab, ComplexMatrix::real_diagonal(&[1.0, 4.0]));
    let pol = TolerancePolicy::default();
    assert!(!predicates::is_normal(&a, &pol).holds);
    assert!(!predicates::is_normal(&b, &pol).holds);
    assert!(predicates::is_self_adjoint(&ab, &pol).holds);
    assert!(close(&abs(&a), &ComplexMatrix::real_diagonal(&[2.0, 1.0])));
    assert!(close(&abs(&b), &ComplexMatrix::real_diagonal(&[1.0, 2.0])));
    // AB is already positive, so it is its own absolute value.
    assert!(close(&abs(&ab), &ab));
    assert!(close(
        &(&abs(&a) * &abs(&b)),
        &ComplexMatrix::real_diagonal(&[2.0, 2.0])
    ));

    // Self-adjointness of the factors fails, so the product theorem is silent.
    let r = check_claim(&instance("C-PRODSA", vec![a, b]), &TolerancePolicy::suite()).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisFail);
    assert!(!r.conclusion_ok);
}

#[test]
fn square_root_of_diagonal() {
    let p = PsdMatrix::new(
        &ComplexMatrix::real_diagonal(&[1.0, 4.0]),
        &TolerancePolicy::default(),
    )
    .unwrap();
    assert!(close(
        psd_sqrt(&p).matrix(),
        &ComplexMatrix::real_diagonal(&[1.0, 2.0])
    ));
}

#[test]
fn square_versus_squared_absolute_value() {
    let a = real([0.0, 2.0, 1.0, 0.0]);
    assert_eq!(&a * &a, ComplexMatrix::real_diagonal(&[2.0, 2.0]));
    assert!(close(
        &abs(&(&a * &a)),
        &ComplexMatrix::real_diagonal(&[2.0, 2.0])
    ));
    let abs_a = abs(&a);
    assert!(close(
        &(&abs_a * &abs_a),
        &ComplexMatrix::real_diagonal(&[1.0, 4.0])
    ));
}

#[test]
fn triangle_inequality_without_commutativity() {
    let a = real([-1.0, 1.0, 1.0, -1.0]);
    let b = ComplexMatrix::real_diagonal(&[2.0, 0.0]);
    let s2 = std::f64::consts::SQRT_2;
    assert!(close(
        &abs(&(&a + &b)),
        &ComplexMatrix::real_diagonal(&[s2, s2])
    ));
    assert!(close(&(&abs(&a) + &abs(&b)), &real([3.0, -1.0, -1.0, 1.0])));

    let pol = TolerancePolicy::suite();
    let r = check_claim(&instance("CE-4", vec![a.clone(), b.clone()]), &pol).unwrap();
    assert_eq!(r.verdict, Verdict::Violation);
    // |A|+|B|-|A+B| = [[3-sqrt2, -1], [-1, 1-sqrt2]]: trace 4-2sqrt2,
    // determinant 4-4sqrt2.
    let tr = 4.0 - 2.0 * s2;
    let det = 4.0 - 4.0 * s2;
    let lambda_min = (tr - (tr * tr - 4.0 * det).sqrt()) / 2.0;
    let residual = r.conclusions[0].check.residual;
    assert!(
        (residual + lambda_min).abs() < 1e-12,
        "{residual} vs {lambda_min}"
    );

    // The commuting theorem does not apply: AB != BA.
    let r = check_claim(&instance("C-TRI", vec![a, b]), &pol).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisFail);
    assert!(!r.conclusion_ok);
}
