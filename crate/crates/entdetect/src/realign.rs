//! The vectorization map, the realignment map, the bordered block matrix
//! and the partial transpose.

use num_complex::Complex64 as C;

use crate::error::Result;
use crate::matrix::CMatrix;
use crate::state::{partial_trace, DensityMatrix, Subsystem};

/// Column-stacked vectorization: entry `j * m + i` of the output is
/// `A[(i, j)]` for an m x n input.
pub fn vectorize(a: &CMatrix) -> CMatrix {
    let (m, n) = (a.nrows(), a.ncols());
    CMatrix::from_fn(m * n, 1, |r, _| a[(r % m, r / m)])
}

/// Realigned matrix of a bipartite state.
///
/// The dB x dB blocks Z_{i,j} of rho become rows of the dA^2 x dB^2
/// output: row `j * dA + i` (0-based) is Vec(Z_{i,j})^T, so the blocks are
/// taken down each block column first. Row order does not affect singular
/// values, but fixtures pin this convention.
pub fn realign(rho: &DensityMatrix) -> CMatrix {
    realign_matrix(rho.matrix(), rho.d_a(), rho.d_b()).expect("state dimensions are consistent")
}

/// Realignment of an arbitrary (dA dB) x (dA dB) matrix, extending the
/// map entrywise beyond density matrices.
pub fn realign_matrix(m: &CMatrix, d_a: usize, d_b: usize) -> Result<CMatrix> {
    let n = d_a * d_b;
    if m.nrows() != n || m.ncols() != n {
        return Err(crate::error::Error::DimensionMismatch {
            expected: format!("{n}x{n}"),
            got: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    let mut out = CMatrix::zeros(d_a * d_a, d_b * d_b);
    for j in 0..d_a {
        for i in 0..d_a {
            let block = m.view((i * d_b, j * d_b), (d_b, d_b)).into_owned();
            let v = vectorize(&block);
            out.row_mut(j * d_a + i).copy_from(&v.transpose());
        }
    }
    Ok(out)
}

/// `l` identical columns Vec(X); `l = 0` gives an empty-column matrix so
/// the bordered construction degenerates cleanly.
pub fn omega(x: &CMatrix, l: usize) -> CMatrix {
    let v = vectorize(x);
    let rows = v.nrows();
    CMatrix::from_fn(rows, l, |r, _| v[(r, 0)])
}

/// The bordered realignment matrix together with its parameters.
#[derive(Debug, Clone)]
pub struct BorderedRealignment {
    pub alpha: f64,
    pub beta: f64,
    pub border: usize,
    pub d_a: usize,
    pub d_b: usize,
    pub matrix: CMatrix,
}

impl BorderedRealignment {
    /// Separable-state bound on the trace norm of this matrix:
    /// sqrt((l alpha^2 + 1)(l beta^2 + 1)).
    pub fn trace_norm_bound(&self) -> f64 {
        trace_norm_bound(self.alpha, self.beta, self.border)
    }

    /// Number of singular values of the matrix.
    pub fn singular_value_count(&self) -> usize {
        (self.border + self.d_a * self.d_a).min(self.border + self.d_b * self.d_b)
    }
}

pub fn trace_norm_bound(alpha: f64, beta: f64, l: usize) -> f64 {
    ((l as f64 * alpha * alpha + 1.0) * (l as f64 * beta * beta + 1.0)).sqrt()
}

/// Assembles the block matrix
/// [[alpha beta E_{lxl},  alpha omega_l(rho_B)^T],
///  [beta omega_l(rho_A), R(rho)]]
/// of size (l + dA^2) x (l + dB^2). The reduced states are recomputed
/// from rho. With `l = 0` the result equals `realign(rho)` exactly.
pub fn bordered_realignment(
    rho: &DensityMatrix,
    alpha: f64,
    beta: f64,
    l: usize,
) -> Result<BorderedRealignment> {
    let (da, db) = (rho.d_a(), rho.d_b());
    let r = realign(rho);
    let rows = l + da * da;
    let cols = l + db * db;
    let mut m = CMatrix::zeros(rows, cols);

    if l > 0 {
        let rho_a = partial_trace(rho, Subsystem::B);
        let rho_b = partial_trace(rho, Subsystem::A);
        let ab = C::new(alpha * beta, 0.0);
        for i in 0..l {
            for j in 0..l {
                m[(i, j)] = ab;
            }
        }
        let top_right = omega(&rho_b, l).transpose() * C::new(alpha, 0.0);
        m.view_mut((0, l), (l, db * db)).copy_from(&top_right);
        let bottom_left = omega(&rho_a, l) * C::new(beta, 0.0);
        m.view_mut((l, 0), (da * da, l)).copy_from(&bottom_left);
    }
    m.view_mut((l, l), (da * da, db * db)).copy_from(&r);

    Ok(BorderedRealignment {
        alpha,
        beta,
        border: l,
        d_a: da,
        d_b: db,
        matrix: m,
    })
}

/// Partial transpose on the B subsystem: block (i, j) becomes Z_{i,j}^T.
pub fn partial_transpose(rho: &DensityMatrix) -> CMatrix {
    let (da, db) = (rho.d_a(), rho.d_b());
    let n = da * db;
    let mut out = CMatrix::zeros(n, n);
    for i in 0..da {
        for j in 0..da {
            let zt = rho.block(i, j).transpose();
            out.view_mut((i * db, j * db), (db, db)).copy_from(&zt);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{
        hermitian_eigenvalues, max_abs_diff, tensor_product,
    };
    use crate::moments::singular_values;
    use crate::state::{bell_noise_state, random_density_matrix, werner_state, DensityMatrix};

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    #[test]
    fn vectorize_column_stacks() {
        let a = CMatrix::from_row_slice(2, 2, &[c(1.0), c(2.0), c(3.0), c(4.0)]);
        let v = vectorize(&a);
        assert_eq!(
            v.iter().map(|z| z.re).collect::<Vec<_>>(),
            vec![1.0, 3.0, 2.0, 4.0]
        );
        let i2 = crate::matrix::identity(2);
        assert_eq!(
            vectorize(&i2).iter().map(|z| z.re).collect::<Vec<_>>(),
            vec![1.0, 0.0, 0.0, 1.0]
        );
        let z = CMatrix::zeros(3, 2);
        assert!(vectorize(&z).iter().all(|e| e.norm() == 0.0));
    }

    #[test]
    fn realign_of_product_state_is_outer_product() {
        let sa = random_density_matrix(2, 2, 10).unwrap();
        let sb = random_density_matrix(2, 2, 11).unwrap();
        let prod = tensor_product(sa.matrix(), sb.matrix());
        let rho = DensityMatrix::trusted(4, 4, prod).unwrap();
        let r = realign(&rho);
        let expected = vectorize(sa.matrix()) * vectorize(sb.matrix()).transpose();
        assert!(max_abs_diff(&r, &expected) < 1e-12);

        // trace norm of a product realignment is the purity product root
        let tn: f64 = singular_values(&r).iter().sum();
        let pa = (sa.matrix() * sa.matrix()).trace().re;
        let pb = (sb.matrix() * sb.matrix()).trace().re;
        assert!((tn - (pa * pb).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn realign_of_maximally_mixed_state() {
        let rho = bell_noise_state(0.0).unwrap();
        let s = singular_values(&realign(&rho));
        assert!((s[0] - 0.5).abs() < 1e-14);
        assert!(s[1..].iter().all(|v| *v < 1e-14));
    }

    #[test]
    fn realign_bell_noise_spectrum() {
        for p in [0.2, 0.5, 0.9] {
            let rho = bell_noise_state(p).unwrap();
            let s = singular_values(&realign(&rho));
            assert!((s[0] - 0.5).abs() < 1e-13);
            for v in &s[1..] {
                assert!((v - p / 2.0).abs() < 1e-13, "p = {p}, sv = {v}");
            }
        }
    }

    #[test]
    fn realign_is_linear() {
        // extend entrywise beyond density matrices via mixtures
        let x = random_density_matrix(2, 2, 20).unwrap();
        let y = random_density_matrix(2, 2, 21).unwrap();
        let (a, b) = (0.3, 0.7);
        let mix = x.matrix() * c(a) + y.matrix() * c(b);
        let rho_mix = DensityMatrix::trusted(2, 2, mix).unwrap();
        let lhs = realign(&rho_mix);
        let rhs = realign(&x) * c(a) + realign(&y) * c(b);
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn realign_singular_values_are_row_order_invariant() {
        let rho = random_density_matrix(2, 3, 33).unwrap();
        let r = realign(&rho);
        // alternative i-major row ordering
        let (da, db) = (rho.d_a(), rho.d_b());
        let mut alt = CMatrix::zeros(da * da, db * db);
        for i in 0..da {
            for j in 0..da {
                let v = vectorize(&rho.block(i, j));
                alt.row_mut(i * da + j).copy_from(&v.transpose());
            }
        }
        let s1 = singular_values(&r);
        let s2 = singular_values(&alt);
        for (a, b) in s1.iter().zip(&s2) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn omega_shapes() {
        let i2 = crate::matrix::identity(2);
        let w1 = omega(&i2, 1);
        assert_eq!((w1.nrows(), w1.ncols()), (4, 1));
        assert_eq!(w1[(0, 0)], c(1.0));
        assert_eq!(w1[(3, 0)], c(1.0));
        let w3 = omega(&i2, 3);
        assert_eq!(w3.ncols(), 3);
        for col in 1..3 {
            assert_eq!(w3.column(col), w3.column(0));
        }
        let w0 = omega(&i2, 0);
        assert_eq!((w0.nrows(), w0.ncols()), (4, 0));
    }

    #[test]
    fn bordered_with_no_border_is_plain_realignment() {
        let rho = bell_noise_state(0.6).unwrap();
        let b = bordered_realignment(&rho, 0.7, 0.3, 0).unwrap();
        assert_eq!(b.matrix, realign(&rho));
    }

    #[test]
    fn bordered_shape_and_corner_block() {
        let rho = bell_noise_state(0.4).unwrap();
        let b = bordered_realignment(&rho, 2.0, 0.5, 3).unwrap();
        assert_eq!((b.matrix.nrows(), b.matrix.ncols()), (7, 7));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.matrix[(i, j)], c(1.0));
            }
        }
    }

    #[test]
    fn werner_border_leaves_three_singular_values_exact() {
        for p in [-1.0, -0.5, 0.3] {
            let rho = werner_state(2, p).unwrap();
            let b = bordered_realignment(&rho, 1e-3, 1e-3, 1).unwrap();
            let s = singular_values(&b.matrix);
            let target = (2.0 * p - 1.0).abs() / 6.0;
            let hits = s.iter().filter(|v| (*v - target).abs() < 1e-10).count();
            assert!(hits >= 3, "p = {p}, singular values {s:?}");
        }
    }

    #[test]
    fn partial_transpose_involution_and_spectra() {
        let rho = random_density_matrix(2, 3, 55).unwrap();
        let pt = partial_transpose(&rho);
        let pt_state = DensityMatrix::trusted(2, 3, pt.clone()).unwrap();
        assert_eq!(partial_transpose(&pt_state), *rho.matrix());

        // product state: PT preserves eigenvalues
        let sa = random_density_matrix(2, 2, 56).unwrap();
        let sb = random_density_matrix(2, 2, 57).unwrap();
        let prod = DensityMatrix::trusted(4, 4, tensor_product(sa.matrix(), sb.matrix())).unwrap();
        let e1 = hermitian_eigenvalues(prod.matrix());
        let e2 = hermitian_eigenvalues(&partial_transpose(&prod));
        for (a, b) in e1.iter().zip(&e2) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_of_bell_projector() {
        let rho = bell_noise_state(1.0).unwrap();
        let eigs = hermitian_eigenvalues(&partial_transpose(&rho));
        assert!((eigs[0] + 0.5).abs() < 1e-13);
    }

    #[test]
    fn partial_transpose_bell_noise_min_eigenvalue() {
        for p in [0.1, 1.0 / 3.0, 0.8] {
            let rho = bell_noise_state(p).unwrap();
            let eigs = hermitian_eigenvalues(&partial_transpose(&rho));
            assert!((eigs[0] - (1.0 - 3.0 * p) / 4.0).abs() < 1e-13);
        }
    }
}
