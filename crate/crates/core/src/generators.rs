//! Seeded ensembles that satisfy claim hypotheses by construction.
//!
//! Commuting tuples share an eigenbasis instead of being filtered out of
//! random pairs; every sampler is a pure function of its RNG stream.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::eigen;
use crate::matrix::{ComplexMatrix, I, ZERO};

/// Identifies one independent random stream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub claim_tag: String,
    pub trial: u64,
}

impl Seed {
    pub fn new(master: u64, claim_tag: impl Into<String>, trial: u64) -> Self {
        Self {
            master,
            claim_tag: claim_tag.into(),
            trial,
        }
    }

    /// Child stream keyed by SHA-256 of `(master, tag, trial)`.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut h = Sha256::new();
        h.update(self.master.to_le_bytes());
        h.update((self.claim_tag.len() as u64).to_le_bytes());
        h.update(self.claim_tag.as_bytes());
        h.update(self.trial.to_le_bytes());
        let digest = h.finalize();
        let mut key = [0u8; 32];
        key.copy_from_slice(&digest);
        ChaCha8Rng::from_seed(key)
    }

    /// `master:trial`, the token accepted by the CLI's `--seed` for replay.
    pub fn replay_token(&self) -> String {
        format!("{}:{}", self.master, self.trial)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum EnsembleKind {
    Unitary,
    SelfAdjoint,
    AntiSymmetric,
    Normal,
    /// `k` normal matrices with one shared eigenbasis.
    CommutingNormalFamily {
        k: usize,
    },
    /// `k` pairwise commuting matrices, all normal but one, which sits at a
    /// random position.
    NormalFamilyWithPartner {
        k: usize,
    },
    /// Normal `A` and a commuting, generally non-normal, `B`.
    NormalWithPartner,
    CommutingPositivePair,
    SaPairNormalProduct,
    NegativeCrossPair,
    OrderedPsdPair {
        commuting: bool,
    },
    /// `(S, T)` with `T` self-adjoint and `-S <= T <= S`.
    SandwichPair,
    /// Normal `A` with a partner that commutes or not, chosen per sample.
    FugledePair,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub dim: usize,
    #[serde(flatten)]
    pub kind: EnsembleKind,
    pub scale: f64,
    /// Keep normal spectra inside the annulus `0.1 <= |lambda| <= scale`.
    pub invertible: bool,
}

impl EnsembleSpec {
    pub fn new(dim: usize, kind: EnsembleKind) -> Self {
        Self {
            dim,
            kind,
            scale: 1.0,
            invertible: false,
        }
    }

    pub fn invertible(mut self) -> Self {
        self.invertible = true;
        self
    }

    pub fn arity(&self) -> usize {
        match self.kind {
            EnsembleKind::Unitary
            | EnsembleKind::SelfAdjoint
            | EnsembleKind::AntiSymmetric
            | EnsembleKind::Normal
            | EnsembleKind::General => 1,
            EnsembleKind::CommutingNormalFamily { k }
            | EnsembleKind::NormalFamilyWithPartner { k } => k,
            _ => 2,
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec<ComplexMatrix> {
        let (n, s) = (self.dim, self.scale);
        let spectrum = SpectrumShape::for_spec(self);
        match self.kind {
            EnsembleKind::Unitary => vec![gen_unitary(n, rng)],
            EnsembleKind::SelfAdjoint => vec![gen_self_adjoint(n, s, rng)],
            EnsembleKind::AntiSymmetric => vec![gen_self_adjoint(n, s, rng).scale(I)],
            EnsembleKind::Normal => {
                let u = gen_unitary(n, rng);
                vec![conjugate_diagonal(&u, &spectrum.draw(n, rng))]
            }
            EnsembleKind::CommutingNormalFamily { k } => {
                gen_commuting_normal_family(n, k, spectrum, rng)
            }
            EnsembleKind::NormalFamilyWithPartner { k } => {
                gen_normal_family_with_partner(n, k, spectrum, rng)
            }
            EnsembleKind::NormalWithPartner => partner_family(n, 2, 1, spectrum, rng),
            EnsembleKind::CommutingPositivePair => {
                let (a, b) = gen_commuting_positive_pair(n, s, rng);
                vec![a, b]
            }
            EnsembleKind::SaPairNormalProduct => {
                let (a, b) = gen_sa_pair_normal_product(s, rng);
                vec![a, b]
            }
            EnsembleKind::NegativeCrossPair => {
                let (a, b) = gen_negative_cross_pair(n, spectrum, rng);
                vec![a, b]
            }
            EnsembleKind::OrderedPsdPair { commuting } => {
                let (a, b) = gen_ordered_psd_pair(n, s, commuting, rng);
                vec![a, b]
            }
            EnsembleKind::SandwichPair => {
                let (sm, t) = gen_sandwich_pair(n, s, rng);
                vec![sm, t]
            }
            EnsembleKind::FugledePair => {
                let (a, b) = gen_fuglede_pair(n, spectrum, rng);
                vec![a, b]
            }
            EnsembleKind::General => vec![gen_general(n, s, rng)],
        }
    }
}

/// Where normal-ensemble eigenvalues are drawn from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumShape {
    /// Uniform on the disk `|lambda| <= radius`.
    Disk { radius: f64 },
    /// Uniform on the annulus `inner <= |lambda| <= outer`.
    Annulus { inner: f64, outer: f64 },
}

impl SpectrumShape {
    fn for_spec(spec: &EnsembleSpec) -> Self {
        if spec.invertible {
            SpectrumShape::Annulus {
                inner: 0.1f64.min(0.5 * spec.scale),
                outer: spec.scale,
            }
        } else {
            SpectrumShape::Disk { radius: spec.scale }
        }
    }

    pub fn point<R: Rng>(&self, rng: &mut R) -> Complex64 {
        let u: f64 = rng.random();
        let theta = TAU * rng.random::<f64>();
        let r = match *self {
            SpectrumShape::Disk { radius } => radius * u.sqrt(),
            SpectrumShape::Annulus { inner, outer } => {
                (u * (outer * outer - inner * inner) + inner * inner).sqrt()
            }
        };
        Complex64::from_polar(r, theta)
    }

    pub fn draw<R: Rng>(&self, n: usize, rng: &mut R) -> Vec<Complex64> {
        (0..n).map(|_| self.point(rng)).collect()
    }
}

fn complex_gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Orthonormalizes the columns of `m` by modified Gram–Schmidt, run twice.
/// The implied triangular factor has a positive real diagonal, which is the
/// phase normalization that makes the result Haar-distributed for Gaussian
/// input.
fn orthonormalize_columns(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.dim();
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| m[(i, j)]).collect())
        .collect();
    for j in 0..n {
        for _pass in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let v = cols[k][i];
                    cols[j][i] -= proj * v;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(n, |i, j| cols[j][i])
}

/// Haar-distributed unitary.
pub fn gen_unitary<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let z = ComplexMatrix::from_fn(n, |_, _| complex_gaussian(rng));
    orthonormalize_columns(&z)
}

/// Haar-distributed real orthogonal matrix.
pub fn gen_orthogonal<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let z = ComplexMatrix::from_fn(n, |_, _| Complex64::new(rng.sample(StandardNormal), 0.0));
    orthonormalize_columns(&z)
}

/// `U diag(d) U*`.
pub fn conjugate_diagonal(u: &ComplexMatrix, d: &[Complex64]) -> ComplexMatrix {
    let n = u.dim();
    ComplexMatrix::from_fn(n, |i, j| {
        let mut acc = ZERO;
        for (k, dk) in d.iter().enumerate() {
            acc += u[(i, k)] * dk * u[(j, k)].conj();
        }
        acc
    })
}

/// `U M U*`.
fn conjugate(u: &ComplexMatrix, m: &ComplexMatrix) -> ComplexMatrix {
    &(u * m) * &u.adjoint()
}

pub fn gen_general<R: Rng>(n: usize, scale: f64, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| complex_gaussian(rng) * scale)
}

/// `(G + G*) / 2` for Gaussian `G`.
pub fn gen_self_adjoint<R: Rng>(n: usize, scale: f64, rng: &mut R) -> ComplexMatrix {
    gen_general(n, scale, rng).hermitian_part()
}

pub fn gen_normal<R: Rng>(n: usize, spectrum: SpectrumShape, rng: &mut R) -> ComplexMatrix {
    let u = gen_unitary(n, rng);
    conjugate_diagonal(&u, &spectrum.draw(n, rng))
}

/// `A_i = U D_i U*` with a shared unitary `U`.
pub fn gen_commuting_normal_family<R: Rng>(
    n: usize,
    k: usize,
    spectrum: SpectrumShape,
    rng: &mut R,
) -> Vec<ComplexMatrix> {
    let u = gen_unitary(n, rng);
    (0..k)
        .map(|_| conjugate_diagonal(&u, &spectrum.draw(n, rng)))
        .collect()
}

/// `k` pairwise commuting matrices, all normal except one.
///
/// In a shared basis `U`, every normal member is scalar on a leading block of
/// size `m >= 2` and diagonal elsewhere; the odd member carries a random upper
/// triangular (non-normal) block there. Its position in the tuple is random.
pub fn gen_normal_family_with_partner<R: Rng>(
    n: usize,
    k: usize,
    spectrum: SpectrumShape,
    rng: &mut R,
) -> Vec<ComplexMatrix> {
    let odd = rng.random_range(0..k);
    partner_family(n, k, odd, spectrum, rng)
}

fn partner_family<R: Rng>(
    n: usize,
    k: usize,
    odd: usize,
    spectrum: SpectrumShape,
    rng: &mut R,
) -> Vec<ComplexMatrix> {
    let u = gen_unitary(n, rng);
    let m = if n >= 2 { rng.random_range(2..=n) } else { 1 };
    (0..k)
        .map(|idx| {
            if idx == odd {
                let mut core = ComplexMatrix::zeros(n);
                for i in 0..n {
                    core[(i, i)] = spectrum.point(rng);
                }
                for i in 0..m {
                    for j in i + 1..m {
                        core[(i, j)] = complex_gaussian(rng) * spectrum.radius();
                    }
                }
                conjugate(&u, &core)
            } else {
                let c = spectrum.point(rng);
                let mut d = spectrum.draw(n, rng);
                for x in d.iter_mut().take(m) {
                    *x = c;
                }
                conjugate_diagonal(&u, &d)
            }
        })
        .collect()
}

impl SpectrumShape {
    fn radius(&self) -> f64 {
        match *self {
            SpectrumShape::Disk { radius } => radius,
            SpectrumShape::Annulus { outer, .. } => outer,
        }
    }
}

/// Commuting PSD pair with a shared eigenbasis, spectra uniform on `[0, scale]`.
pub fn gen_commuting_positive_pair<R: Rng>(
    n: usize,
    scale: f64,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let u = gen_unitary(n, rng);
    let mut draw = || -> Vec<Complex64> {
        (0..n)
            .map(|_| Complex64::new(scale * rng.random::<f64>(), 0.0))
            .collect()
    };
    let da = draw();
    let db = draw();
    (conjugate_diagonal(&u, &da), conjugate_diagonal(&u, &db))
}

/// Parameters of a 2x2 self-adjoint pair with normal product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SaPairShape {
    /// `A = a (n1 . sigma)`, `B = b (n2 . sigma)` with orthogonal unit
    /// vectors `n1, n2`: the pair anticommutes, so `AB` is skew-adjoint
    /// (normal, not self-adjoint) and `AB != BA`.
    Anticommuting {
        a: f64,
        b: f64,
        n1: [f64; 3],
        n2: [f64; 3],
    },
    /// `A = diag(a)`, `B = diag(b)` before conjugation; commuting, with `AB`
    /// self-adjoint. Positive when all entries are.
    Commuting { a: [f64; 2], b: [f64; 2] },
}

fn pauli_combination(v: [f64; 3]) -> ComplexMatrix {
    // v . (sigma_x, sigma_y, sigma_z)
    ComplexMatrix::new(
        2,
        vec![
            Complex64::new(v[2], 0.0),
            Complex64::new(v[0], -v[1]),
            Complex64::new(v[0], v[1]),
            Complex64::new(-v[2], 0.0),
        ],
    )
    .expect("finite entries")
}

/// Builds the pair for `shape`, conjugated by the real orthogonal `v`.
pub fn sa_pair_from_shape(shape: SaPairShape, v: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let (a, b) = match shape {
        SaPairShape::Anticommuting { a, b, n1, n2 } => (
            pauli_combination(n1).scale_real(a),
            pauli_combination(n2).scale_real(b),
        ),
        SaPairShape::Commuting { a, b } => (
            ComplexMatrix::real_diagonal(&a),
            ComplexMatrix::real_diagonal(&b),
        ),
    };
    (conjugate(v, &a), conjugate(v, &b))
}

fn unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 1e-3 {
            return [v[0] / norm, v[1] / norm, v[2] / norm];
        }
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn nonzero_real<R: Rng>(scale: f64, rng: &mut R) -> f64 {
    let mag = scale * rng.random_range(0.1..=1.0);
    if rng.random_bool(0.5) {
        mag
    } else {
        -mag
    }
}

/// Self-adjoint 2x2 pair whose product is normal.
///
/// Half the samples anticommute (normal, non-self-adjoint product); the rest
/// commute, split evenly between positive pairs and pairs of mixed sign.
pub fn gen_sa_pair_normal_product<R: Rng>(
    scale: f64,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let shape = if rng.random_bool(0.5) {
        let n1 = unit_vector(rng);
        let w = unit_vector(rng);
        let c = cross(n1, w);
        let norm = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        let n2 = [c[0] / norm, c[1] / norm, c[2] / norm];
        SaPairShape::Anticommuting {
            a: nonzero_real(scale, rng),
            b: nonzero_real(scale, rng),
            n1,
            n2,
        }
    } else if rng.random_bool(0.5) {
        let mut pos = || scale * rng.random_range(0.1..=1.0);
        SaPairShape::Commuting {
            a: [pos(), pos()],
            b: [pos(), pos()],
        }
    } else {
        SaPairShape::Commuting {
            a: [nonzero_real(scale, rng), nonzero_real(scale, rng)],
            b: [nonzero_real(scale, rng), nonzero_real(scale, rng)],
        }
    };
    let v = gen_orthogonal(2, rng);
    sa_pair_from_shape(shape, &v)
}

/// Normal `A` and `B = c A` with `Re c <= 0`, so `A*B + B*A = 2 Re(c) A*A <= 0`.
pub fn gen_negative_cross_pair<R: Rng>(
    n: usize,
    spectrum: SpectrumShape,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let a = gen_normal(n, spectrum, rng);
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    let c = Complex64::new(-re.abs(), im);
    let b = a.scale(c);
    (a, b)
}

/// `(A, B)` with `A >= B >= 0`: `B = G*G` and `A = B + increment`. With
/// `commuting`, the increment is diagonal in an eigenbasis of `B`.
pub fn gen_ordered_psd_pair<R: Rng>(
    n: usize,
    scale: f64,
    commuting: bool,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let g = gen_general(n, scale, rng);
    let b = (&g.adjoint() * &g).hermitian_part();
    let weight: f64 = rng.random();
    let increment = if commuting {
        let (_, eig) = eigen::jacobi(&b);
        let c: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(weight * scale * scale * rng.random::<f64>(), 0.0))
            .collect();
        conjugate_diagonal(&eig.eigenvectors, &c)
    } else {
        let h = gen_general(n, scale, rng);
        (&h.adjoint() * &h).hermitian_part().scale_real(weight)
    };
    (&b + &increment, b)
}

/// `(S, T)` with `T = U diag(t) U*` self-adjoint and
/// `S = U diag(|t|) U* + w H*H`, so `S - T` and `S + T` are both PSD.
pub fn gen_sandwich_pair<R: Rng>(
    n: usize,
    scale: f64,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let u = gen_unitary(n, rng);
    let t: Vec<f64> = (0..n)
        .map(|_| scale * rng.random_range(-1.0..=1.0))
        .collect();
    let tc: Vec<Complex64> = t.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let abs: Vec<Complex64> = t.iter().map(|&x| Complex64::new(x.abs(), 0.0)).collect();
    let h = gen_general(n, scale, rng);
    let weight: f64 = rng.random();
    let s = &conjugate_diagonal(&u, &abs) + &(&h.adjoint() * &h).scale_real(weight);
    (s.hermitian_part(), conjugate_diagonal(&u, &tc))
}

/// Normal `A` with either a commuting (possibly non-normal) partner or an
/// unrelated Gaussian one, each with probability 1/2.
pub fn gen_fuglede_pair<R: Rng>(
    n: usize,
    spectrum: SpectrumShape,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    if rng.random_bool(0.5) {
        let mut fam = partner_family(n, 2, 1, spectrum, rng);
        let b = fam.pop().expect("two members");
        let a = fam.pop().expect("two members");
        (a, b)
    } else {
        let a = gen_normal(n, spectrum, rng);
        (a, gen_general(n, spectrum.radius(), rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{commutes, is_normal, is_self_adjoint};
    use crate::tolerance::TolerancePolicy;

    fn rng(trial: u64) -> ChaCha8Rng {
        Seed::new(7, "unit", trial).rng()
    }

    #[test]
    fn seed_streams_are_deterministic_and_distinct() {
        let a: u64 = Seed::new(1, "C-TRI:2", 0).rng().random();
        let b: u64 = Seed::new(1, "C-TRI:2", 0).rng().random();
        let c: u64 = Seed::new(1, "C-TRI:2", 1).rng().random();
        let d: u64 = Seed::new(1, "C-TRI:3", 0).rng().random();
        let e: u64 = Seed::new(2, "C-TRI:2", 0).rng().random();
        assert_eq!(a, b);
        assert!(a != c && a != d && a != e && c != d);
    }

    #[test]
    fn unitary_of_dim_one_has_unit_modulus() {
        let u = gen_unitary(1, &mut rng(0));
        assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unitary_is_bit_identical_for_fixed_seed() {
        assert_eq!(gen_unitary(5, &mut rng(3)), gen_unitary(5, &mut rng(3)));
    }

    #[test]
    fn unitaries_are_unitary() {
        for n in 1..=16 {
            let u = gen_unitary(n, &mut rng(n as u64));
            let r = (&u.adjoint() * &u).distance(&ComplexMatrix::identity(n));
            assert!(r <= 1e-10, "n={n} residual {r}");
        }
    }

    #[test]
    fn zero_scale_general_is_zero() {
        assert_eq!(gen_general(3, 0.0, &mut rng(0)), ComplexMatrix::zeros(3));
    }

    #[test]
    fn real_spectra_give_self_adjoint_family() {
        let mut r = rng(1);
        let u = gen_unitary(4, &mut r);
        let d: Vec<Complex64> = (0..4)
            .map(|i| Complex64::new(i as f64 - 1.5, 0.0))
            .collect();
        let a = conjugate_diagonal(&u, &d);
        assert!(is_self_adjoint(&a, &TolerancePolicy::default()).holds);
    }

    #[test]
    fn sa_pair_anticommuting_shape() {
        let shape = SaPairShape::Anticommuting {
            a: 1.0,
            b: 2.0,
            n1: [1.0, 0.0, 0.0],
            n2: [0.0, 0.0, 1.0],
        };
        let (a, b) = sa_pair_from_shape(shape, &ComplexMatrix::identity(2));
        // sigma_x and 2 sigma_z
        assert_eq!(
            a,
            ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
        );
        assert_eq!(b, ComplexMatrix::real_diagonal(&[2.0, -2.0]));
        let ab = &a * &b;
        assert_eq!(
            ab,
            ComplexMatrix::from_real(2, &[0.0, -2.0, 2.0, 0.0]).unwrap()
        );
        let pol = TolerancePolicy::default();
        assert!(is_normal(&ab, &pol).holds);
        assert!(!is_self_adjoint(&ab, &pol).holds);
        assert!(!commutes(&a, &b, &pol).unwrap().holds);
    }

    #[test]
    fn ordered_pairs_are_ordered() {
        let pol = TolerancePolicy::default();
        for commuting in [false, true] {
            for t in 0..20 {
                let (a, b) = gen_ordered_psd_pair(4, 1.0, commuting, &mut rng(t));
                assert!(crate::predicates::is_positive(&b, &pol).holds);
                assert!(crate::calculus::loewner_leq(&b, &a, &pol).unwrap().holds);
                if commuting {
                    assert!(commutes(&a, &b, &pol).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn pair_claims_get_the_partner_second() {
        let pol = TolerancePolicy::default();
        let spec = EnsembleSpec::new(3, EnsembleKind::NormalWithPartner);
        for t in 0..20 {
            let m = spec.sample(&mut rng(t));
            assert!(is_normal(&m[0], &pol).holds);
            assert!(!is_normal(&m[1], &pol).holds);
        }
    }

    #[test]
    fn partner_family_has_one_non_normal_member_in_dim_three() {
        let pol = TolerancePolicy::default();
        let spectrum = SpectrumShape::Disk { radius: 1.0 };
        for t in 0..20 {
            let fam = gen_normal_family_with_partner(3, 3, spectrum, &mut rng(t));
            let non_normal = fam.iter().filter(|m| !is_normal(m, &pol).holds).count();
            assert_eq!(non_normal, 1, "trial {t}");
            for i in 0..3 {
                for j in 0..3 {
                    assert!(commutes(&fam[i], &fam[j], &pol).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn annulus_points_stay_in_annulus() {
        let shape = SpectrumShape::Annulus {
            inner: 0.1,
            outer: 1.0,
        };
        let mut r = rng(9);
        for _ in 0..1000 {
            let z = shape.point(&mut r).norm();
            assert!((0.1 - 1e-12..=1.0 + 1e-12).contains(&z));
        }
    }
}
