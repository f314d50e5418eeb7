//! Partial-pivot LU factorization.
//!
//! Pivot choice: largest modulus in the column, lowest row index on ties.

use num_complex::Complex64;

use crate::matrix::{ComplexMatrix, ONE, ZERO};

pub(crate) struct Lu {
    n: usize,
    lu: Vec<Complex64>,
    perm: Vec<usize>,
    singular: bool,
}

impl Lu {
    pub(crate) fn factor(a: &ComplexMatrix) -> Self {
        let n = a.dim();
        let mut lu = a.entries().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut singular = false;
        for col in 0..n {
            let mut pivot = col;
            let mut best = lu[col * n + col].norm();
            for row in col + 1..n {
                let m = lu[row * n + col].norm();
                if m > best {
                    best = m;
                    pivot = row;
                }
            }
            if best == 0.0 {
                singular = true;
                continue;
            }
            if pivot != col {
                for k in 0..n {
                    lu.swap(col * n + k, pivot * n + k);
                }
                perm.swap(col, pivot);
            }
            let d = lu[col * n + col];
            for row in col + 1..n {
                let factor = lu[row * n + col] / d;
                lu[row * n + col] = factor;
                for k in col + 1..n {
                    let u = lu[col * n + k];
                    lu[row * n + k] -= factor * u;
                }
            }
        }
        Self {
            n,
            lu,
            perm,
            singular,
        }
    }

    #[cfg(test)]
    pub(crate) fn is_singular(&self) -> bool {
        self.singular
    }

    /// `ln |det A|`; `-inf` when singular.
    pub(crate) fn log_abs_det(&self) -> f64 {
        if self.singular {
            return f64::NEG_INFINITY;
        }
        (0..self.n)
            .map(|i| self.lu[i * self.n + i].norm().ln())
            .sum()
    }

    /// `A^{-1}`, or `None` when a zero pivot was met.
    pub(crate) fn inverse(&self) -> Option<ComplexMatrix> {
        if self.singular {
            return None;
        }
        let n = self.n;
        let mut inv = ComplexMatrix::zeros(n);
        let mut x = vec![ZERO; n];
        for col in 0..n {
            // Solve L y = P e_col, then U x = y.
            for i in 0..n {
                let mut acc = if self.perm[i] == col { ONE } else { ZERO };
                for k in 0..i {
                    acc -= self.lu[i * n + k] * x[k];
                }
                x[i] = acc;
            }
            for i in (0..n).rev() {
                let mut acc = x[i];
                for k in i + 1..n {
                    acc -= self.lu[i * n + k] * x[k];
                }
                x[i] = acc / self.lu[i * n + i];
            }
            for i in 0..n {
                inv[(i, col)] = x[i];
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_permuted_matrix() {
        let a =
            ComplexMatrix::from_real(3, &[0.0, 2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 3.0]).unwrap();
        let lu = Lu::factor(&a);
        let inv = lu.inverse().unwrap();
        assert!((&a * &inv).distance(&ComplexMatrix::identity(3)) < 1e-15);
        // det = -(2*3 - 1*1) = -5
        assert!((lu.log_abs_det() - 5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn singular_matrix_flagged() {
        let a = ComplexMatrix::from_real(2, &[1.0, 2.0, 2.0, 4.0]).unwrap();
        let lu = Lu::factor(&a);
        assert!(lu.is_singular());
        assert!(lu.inverse().is_none());
        assert_eq!(lu.log_abs_det(), f64::NEG_INFINITY);
    }
}
