//! Complex matrix helpers shared across the crate.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex<f64>`. The
//! computational product basis |i>_A |j>_B is ordered with the A index
//! major, i.e. the composite row index is `i * d_b + j`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dynamically sized complex matrix.
pub type CMatrix = DMatrix<Complex64>;

/// Identity matrix of size `n`.
pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Kronecker product with the left factor index major.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Largest entry magnitude, zero for empty matrices.
pub fn max_abs_entry(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn all_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn check_finite(m: &CMatrix) -> Result<()> {
    if all_finite(m) {
        Ok(())
    } else {
        Err(Error::NonFiniteEntries)
    }
}

/// Largest entry magnitude of `m - m^dagger`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    max_abs_entry(&(m - m.adjoint()))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut vals: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Entrywise maximum distance between two matrices of the same shape.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    max_abs_entry(&(a - b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn diag(entries: &[f64]) -> CMatrix {
        CMatrix::from_fn(entries.len(), entries.len(), |i, j| {
            if i == j {
                C::new(entries[i], 0.0)
            } else {
                C::new(0.0, 0.0)
            }
        })
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let i2 = identity(2);
        assert_eq!(tensor_product(&i2, &i2), identity(4));
    }

    #[test]
    fn tensor_of_basis_projectors() {
        let a = diag(&[1.0, 0.0]);
        let b = diag(&[0.0, 1.0]);
        assert_eq!(tensor_product(&a, &b), diag(&[0.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn tensor_of_maximally_mixed_factors() {
        let half = diag(&[0.5, 0.5]);
        let prod = tensor_product(&half, &half);
        assert_eq!(prod, diag(&[0.25; 4]));
    }

    #[test]
    fn hermitian_eigenvalues_sorted() {
        let m = CMatrix::from_row_slice(2, 2, &[C::new(1.0, 0.0), C::new(2.0, 0.0), C::new(2.0, 0.0), C::new(1.0, 0.0)]);
        let vals = hermitian_eigenvalues(&m);
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
    }
}
