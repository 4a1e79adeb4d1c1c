//! Singular values, Schatten norms, moment sequences and Hankel matrices.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::realign::BorderedRealignment;

/// All `min(rows, cols)` singular values, descending.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = m
        .clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}

/// Schatten-p norm (sum_i s_i^p)^(1/p); p = 1 is the trace norm.
pub fn schatten_norm(m: &CMatrix, p: f64) -> Result<f64> {
    if p < 1.0 {
        return Err(Error::ParameterOutOfRange(format!(
            "Schatten norm requires p >= 1, got {p}"
        )));
    }
    let s = singular_values(m);
    Ok(s.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p))
}

/// Trace norm, the p = 1 Schatten norm.
pub fn trace_norm(m: &CMatrix) -> f64 {
    singular_values(m).iter().sum()
}

/// Convention for the zeroth moment a_0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum A0Convention {
    /// a_0 = (dA^2 - 1)(dB^2 - 1), the published convention. Safe for the
    /// Hankel tests whenever it is at least the singular-value count.
    DimensionProduct,
    /// a_0 = l + dA^2, the trace of the identity on the square factor
    /// (M M^dagger)^(1/2). This is the value the Gram construction
    /// actually yields, so Hankel positivity holds for every state.
    MatrixDimension,
}

/// Moments a_k = sum_i s_i^k of a bordered realignment matrix, with the
/// parameters they were computed from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MomentSequence {
    /// a_0 ... a_K.
    pub values: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub l: usize,
    pub d_a: usize,
    pub d_b: usize,
    pub a0_convention: A0Convention,
    /// Set when K exceeds (dA^2 - 1)(dB^2 - 1).
    pub beyond_standard_range: bool,
}

impl MomentSequence {
    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn a(&self, k: usize) -> f64 {
        self.values[k]
    }

    /// CSV with header `k,a_k`, one row per moment, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,a_k\n");
        for (k, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{k},{v:.16e}\n"));
        }
        out
    }
}

/// Default number of moments: enough for the largest Hankel matrices of a
/// square factor with `n` singular values.
pub fn default_moment_count(n: usize) -> usize {
    (2 * (n / 2)).max(2 * ((n - 1) / 2) + 1)
}

/// Computes a_1 ... a_K from one SVD of the bordered matrix; a_0 is set by
/// the convention.
pub fn moments(b: &BorderedRealignment, k_max: usize, convention: A0Convention) -> Result<MomentSequence> {
    if k_max < 1 {
        return Err(Error::ParameterOutOfRange("K must be >= 1".into()));
    }
    let s = singular_values(&b.matrix);
    let a0 = match convention {
        A0Convention::DimensionProduct => {
            ((b.d_a * b.d_a - 1) * (b.d_b * b.d_b - 1)) as f64
        }
        A0Convention::MatrixDimension => (b.border + b.d_a * b.d_a) as f64,
    };
    let mut values = Vec::with_capacity(k_max + 1);
    values.push(a0);
    for k in 1..=k_max {
        values.push(s.iter().map(|v| v.powi(k as i32)).sum());
    }
    let standard_max = (b.d_a * b.d_a - 1) * (b.d_b * b.d_b - 1);
    Ok(MomentSequence {
        values,
        alpha: b.alpha,
        beta: b.beta,
        l: b.border,
        d_a: b.d_a,
        d_b: b.d_b,
        a0_convention: convention,
        beyond_standard_range: k_max > standard_max,
    })
}

/// Which Hankel family a matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HankelKind {
    /// Entries a_{i+j}, (k+1) x (k+1).
    H,
    /// Entries a_{m+n+1}, (r+1) x (r+1).
    B,
}

/// A Hankel moment matrix that still knows which entries hold a_1.
#[derive(Debug, Clone)]
pub struct HankelMatrix {
    pub kind: HankelKind,
    pub order: usize,
    pub matrix: DMatrix<f64>,
}

impl HankelMatrix {
    fn moment_index(&self, i: usize, j: usize) -> usize {
        match self.kind {
            HankelKind::H => i + j,
            HankelKind::B => i + j + 1,
        }
    }

    /// Copy with every a_1 entry replaced by `bound`; other entries are
    /// untouched.
    pub fn substituted(&self, bound: f64) -> DMatrix<f64> {
        let mut m = self.matrix.clone();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if self.moment_index(i, j) == 1 {
                    m[(i, j)] = bound;
                }
            }
        }
        m
    }
}

/// H_k(a): (k+1) x (k+1) with entries a_{i+j}.
pub fn hankel_h(a: &MomentSequence, k: usize) -> Result<HankelMatrix> {
    if a.max_order() < 2 * k {
        return Err(Error::InsufficientMoments {
            needed: 2 * k,
            have: a.max_order(),
        });
    }
    Ok(HankelMatrix {
        kind: HankelKind::H,
        order: k,
        matrix: DMatrix::from_fn(k + 1, k + 1, |i, j| a.a(i + j)),
    })
}

/// B_r(a): (r+1) x (r+1) with entries a_{m+n+1}.
pub fn hankel_b(a: &MomentSequence, r: usize) -> Result<HankelMatrix> {
    if a.max_order() < 2 * r + 1 {
        return Err(Error::InsufficientMoments {
            needed: 2 * r + 1,
            have: a.max_order(),
        });
    }
    Ok(HankelMatrix {
        kind: HankelKind::B,
        order: r,
        matrix: DMatrix::from_fn(r + 1, r + 1, |i, j| a.a(i + j + 1)),
    })
}

/// Smallest eigenvalue of a real symmetric matrix.
pub fn min_eigenvalue(s: &DMatrix<f64>) -> Result<f64> {
    let asym = (s - s.transpose()).iter().map(|v| v.abs()).fold(0.0, f64::max);
    if asym > 1e-12 {
        return Err(Error::NotSymmetric(asym));
    }
    Ok(s.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min))
}

/// Minimum eigenvalues of the two Hankel families with the a_1
/// substitution applied, as reported by the theorem-2 style criteria.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HankelReport {
    pub kind: HankelKind,
    pub order: usize,
    pub min_eigenvalue: f64,
    /// Largest entry magnitude, used for the relative PSD tolerance.
    pub scale: f64,
}

/// PSD verdict tolerance: a matrix counts as "not PSD" only below
/// -1e-9 * max(1, largest |entry|).
pub fn psd_tolerance(scale: f64) -> f64 {
    1e-9 * scale.max(1.0)
}
