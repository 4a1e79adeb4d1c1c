//! State file serialization.
//!
//! States are stored as `{"dA": int, "dB": int, "matrix": [[[re, im], ...], ...]}`
//! with row-major real/imag pairs at full double precision.

use std::path::Path;

use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::CMatrix;
use crate::state::DensityMatrix;

#[derive(Debug, Serialize, Deserialize)]
struct StateFile {
    #[serde(rename = "dA")]
    d_a: usize,
    #[serde(rename = "dB")]
    d_b: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

pub fn state_to_json(rho: &DensityMatrix) -> Result<String> {
    let n = rho.dim();
    let m = rho.matrix();
    let rows: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| (0..n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect();
    let file = StateFile {
        d_a: rho.d_a(),
        d_b: rho.d_b(),
        matrix: rows,
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses and fully validates a state, including the positivity check.
pub fn state_from_json(text: &str) -> Result<DensityMatrix> {
    let file: StateFile = serde_json::from_str(text)?;
    let n = file.d_a * file.d_b;
    let mut m = CMatrix::zeros(n, n);
    for (i, row) in file.matrix.iter().enumerate().take(n) {
        for (j, pair) in row.iter().enumerate().take(n) {
            m[(i, j)] = C::new(pair[0], pair[1]);
        }
    }
    if file.matrix.len() != n || file.matrix.iter().any(|r| r.len() != n) {
        return Err(crate::error::Error::DimensionMismatch {
            expected: format!("{n} rows of {n} entries"),
            got: format!("{} rows", file.matrix.len()),
        });
    }
    DensityMatrix::new(file.d_a, file.d_b, m)
}

pub fn save_state(rho: &DensityMatrix, path: &Path) -> Result<()> {
    std::fs::write(path, state_to_json(rho)?)?;
    Ok(())
}

pub fn load_state(path: &Path) -> Result<DensityMatrix> {
    state_from_json(&std::fs::read_to_string(path)?)
}
