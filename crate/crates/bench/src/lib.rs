//! Seeded inputs shared by the benchmarks.

use modulus_core::generators::gen_general;
use modulus_core::{ComplexMatrix, PsdMatrix, Seed, TolerancePolicy};

pub const DIMS: [usize; 4] = [2, 4, 8, 16];

pub fn general(n: usize) -> ComplexMatrix {
    gen_general(n, 1.0, &mut Seed::new(1, format!("bench:{n}"), 0).rng())
}

pub fn hermitian(n: usize) -> ComplexMatrix {
    general(n).hermitian_part()
}

pub fn psd(n: usize) -> PsdMatrix {
    let g = general(n);
    PsdMatrix::new(&(&g.adjoint() * &g), &TolerancePolicy::default()).expect("Gram matrix is PSD")
}
