//! Bipartite density matrices and the named state families.

use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::matrix::{
    all_finite, hermitian_eigenvalues, hermiticity_defect, identity, tensor_product, CMatrix,
};

/// Absolute tolerance for Hermiticity, trace and positivity checks.
pub const VALIDATION_TOL: f64 = 1e-10;

/// A bipartite density matrix on C^{dA} (x) C^{dB}.
///
/// The matrix is indexed in the computational product basis with the A
/// index major: row `i * d_b + j` corresponds to |i>_A |j>_B.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    d_a: usize,
    d_b: usize,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Builds a state with full validation: Hermiticity, unit trace and
    /// positive semidefiniteness, each at [`VALIDATION_TOL`].
    pub fn new(d_a: usize, d_b: usize, matrix: CMatrix) -> Result<Self> {
        let state = Self::trusted(d_a, d_b, matrix)?;
        let min_eig = hermitian_eigenvalues(&state.matrix)[0];
        if min_eig < -VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite: min eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(state)
    }

    /// Construction path for internally generated states: checks shape,
    /// finiteness, Hermiticity and trace but skips the eigen-solve for
    /// positivity. File-loaded states must go through [`DensityMatrix::new`].
    pub fn trusted(d_a: usize, d_b: usize, matrix: CMatrix) -> Result<Self> {
        let n = d_a * d_b;
        if d_a < 2 || d_b < 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "subsystem dimensions must be >= 2, got {d_a} x {d_b}"
            )));
        }
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("{n}x{n}"),
                got: format!("{}x{}", matrix.nrows(), matrix.ncols()),
            });
        }
        if !all_finite(&matrix) {
            return Err(Error::NonFiniteEntries);
        }
        let herm = hermiticity_defect(&matrix);
        if herm > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian: max |rho - rho^dagger| = {herm:.3e}"
            )));
        }
        let trace = matrix.trace();
        if (trace - C::new(1.0, 0.0)).norm() > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "trace is {trace}, expected 1"
            )));
        }
        Ok(Self { d_a, d_b, matrix })
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// The dB x dB block Z_{i,j} of the state, 0-based block indices.
    pub fn block(&self, i: usize, j: usize) -> CMatrix {
        self.matrix
            .view((i * self.d_b, j * self.d_b), (self.d_b, self.d_b))
            .into_owned()
    }
}

/// Which subsystem to trace out or keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Reduced density matrix: tracing over B yields the dA x dA state of A,
/// tracing over A yields the dB x dB state of B.
pub fn partial_trace(rho: &DensityMatrix, traced_out: Subsystem) -> CMatrix {
    let (da, db) = (rho.d_a(), rho.d_b());
    match traced_out {
        Subsystem::B => CMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|k| rho.matrix()[(i * db + k, j * db + k)]).sum()
        }),
        Subsystem::A => CMatrix::from_fn(db, db, |k, l| {
            (0..da).map(|i| rho.matrix()[(i * db + k, i * db + l)]).sum()
        }),
    }
}

fn max_entangled_projector(d: usize) -> CMatrix {
    // |phi> = 1/sqrt(d) sum_i |ii>
    let n = d * d;
    let amp = 1.0 / d as f64;
    CMatrix::from_fn(n, n, |r, c| {
        let (ri, rj) = (r / d, r % d);
        let (ci, cj) = (c / d, c % d);
        if ri == rj && ci == cj {
            C::new(amp, 0.0)
        } else {
            C::new(0.0, 0.0)
        }
    })
}

/// Bell state mixed with white noise: p |phi+><phi+| + (1-p)/4 I.
pub fn bell_noise_state(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange(format!(
            "bell-noise parameter p = {p}, expected [0, 1]"
        )));
    }
    let m = max_entangled_projector(2) * C::new(p, 0.0)
        + identity(4) * C::new((1.0 - p) / 4.0, 0.0);
    DensityMatrix::trusted(2, 2, m)
}

/// The flip (swap) operator on C^d (x) C^d: F |i>|j> = |j>|i>.
pub fn flip_operator(d: usize) -> CMatrix {
    let n = d * d;
    CMatrix::from_fn(n, n, |r, c| {
        let (ri, rj) = (r / d, r % d);
        let (ci, cj) = (c / d, c % d);
        if ri == cj && rj == ci {
            C::new(1.0, 0.0)
        } else {
            C::new(0.0, 0.0)
        }
    })
}

/// Werner state on C^d (x) C^d:
/// rho_W = [(d - p) I + (d p - 1) F] / (d^3 - d), separable iff p >= 0.
pub fn werner_state(d: usize, p: f64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange(format!("werner dimension d = {d}")));
    }
    if !(-1.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange(format!(
            "werner parameter p = {p}, expected [-1, 1]"
        )));
    }
    let norm = (d.pow(3) - d) as f64;
    let m = identity(d * d) * C::new((d as f64 - p) / norm, 0.0)
        + flip_operator(d) * C::new((d as f64 * p - 1.0) / norm, 0.0);
    DensityMatrix::trusted(d, d, m)
}

/// Two-qubit isotropic-type state:
/// rho_b = (1-b)/3 I + (4b-1)/3 |phi+><phi+|, with Bell fidelity b.
pub fn isotropic_b_state(b: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&b) {
        return Err(Error::ParameterOutOfRange(format!(
            "isotropic parameter b = {b}, expected [0, 1]"
        )));
    }
    let m = identity(4) * C::new((1.0 - b) / 3.0, 0.0)
        + max_entangled_projector(2) * C::new((4.0 * b - 1.0) / 3.0, 0.0);
    DensityMatrix::trusted(2, 2, m)
}

fn random_unit_vector(rng: &mut ChaCha12Rng, d: usize) -> Vec<C> {
    // Normalized complex Gaussian components give a Haar-distributed
    // direction.
    loop {
        let v: Vec<C> = (0..d)
            .map(|_| C::new(gaussian(rng), gaussian(rng)))
            .collect();
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.iter().map(|z| z / norm).collect();
        }
    }
}

// Box-Muller; documented so other implementations can match the
// distribution (not the bit stream).
fn gaussian(rng: &mut ChaCha12Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn projector(v: &[C]) -> CMatrix {
    CMatrix::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
}

/// Convex mixture of `terms` random pure product states, deterministic in
/// the seed. This is the separable oracle for the no-false-positive tests.
pub fn random_separable_state(
    d_a: usize,
    d_b: usize,
    terms: usize,
    seed: u64,
) -> Result<DensityMatrix> {
    if terms == 0 {
        return Err(Error::ParameterOutOfRange("terms must be >= 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.gen_range(0.0..1.0) + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);

    let n = d_a * d_b;
    let mut m = CMatrix::zeros(n, n);
    for w in weights {
        let a = random_unit_vector(&mut rng, d_a);
        let b = random_unit_vector(&mut rng, d_b);
        m += tensor_product(&projector(&a), &projector(&b)) * C::new(w, 0.0);
    }
    DensityMatrix::trusted(d_a, d_b, m)
}

/// Full-rank random state G G^dagger / tr(G G^dagger) from a complex
/// Gaussian G, deterministic in the seed.
pub fn random_density_matrix(d_a: usize, d_b: usize, seed: u64) -> Result<DensityMatrix> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = d_a * d_b;
    let g = CMatrix::from_fn(n, n, |_, _| C::new(gaussian(&mut rng), gaussian(&mut rng)));
    let gg = &g * g.adjoint();
    let trace = gg.trace().re;
    DensityMatrix::trusted(d_a, d_b, gg / C::new(trace, 0.0))
}

/// One-parameter state families used by the explorer and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateFamily {
    /// p |phi+><phi+| + (1-p)/4 I, p in [0, 1].
    BellNoise,
    /// Werner state on d (x) d, p in [-1, 1].
    Werner { d: usize },
    /// Isotropic-type two-qubit state, b in [0, 1].
    IsotropicB,
}

impl StateFamily {
    pub fn state_at(&self, param: f64) -> Result<DensityMatrix> {
        match self {
            StateFamily::BellNoise => bell_noise_state(param),
            StateFamily::Werner { d } => werner_state(*d, param),
            StateFamily::IsotropicB => isotropic_b_state(param),
        }
    }

    /// Full declared parameter range of the family.
    pub fn param_range(&self) -> (f64, f64) {
        match self {
            StateFamily::BellNoise | StateFamily::IsotropicB => (0.0, 1.0),
            StateFamily::Werner { .. } => (-1.0, 1.0),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            StateFamily::BellNoise => "bell-noise",
            StateFamily::Werner { .. } => "werner",
            StateFamily::IsotropicB => "isotropic-b",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::max_abs_diff;

    fn assert_valid(rho: &DensityMatrix) {
        assert!(hermiticity_defect(rho.matrix()) <= VALIDATION_TOL);
        assert!((rho.matrix().trace().re - 1.0).abs() <= VALIDATION_TOL);
        assert!(hermitian_eigenvalues(rho.matrix())[0] >= -VALIDATION_TOL);
    }

    #[test]
    fn bell_noise_endpoints() {
        let mixed = bell_noise_state(0.0).unwrap();
        assert!(max_abs_diff(mixed.matrix(), &(identity(4) * C::new(0.25, 0.0))) < 1e-15);
        let bell = bell_noise_state(1.0).unwrap();
        assert!((bell.matrix()[(0, 3)].re - 0.5).abs() < 1e-15);
        assert!((bell.matrix()[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!(bell.matrix()[(1, 1)].norm() < 1e-15);
        assert_valid(&bell);
    }

    #[test]
    fn bell_noise_half() {
        let rho = bell_noise_state(0.5).unwrap();
        assert!((rho.matrix()[(0, 3)].re - 0.25).abs() < 1e-15);
        assert!((rho.matrix()[(0, 0)].re - 0.375).abs() < 1e-15);
    }

    #[test]
    fn bell_noise_rejects_out_of_range() {
        assert!(bell_noise_state(-0.01).is_err());
        assert!(bell_noise_state(1.01).is_err());
    }

    #[test]
    fn werner_d2_entries() {
        for p in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            let rho = werner_state(2, p).unwrap();
            assert_valid(&rho);
            // |00> and |11> diagonal entries
            assert!((rho.matrix()[(0, 0)].re - (1.0 + p) / 6.0).abs() < 1e-14);
            assert!((rho.matrix()[(3, 3)].re - (1.0 + p) / 6.0).abs() < 1e-14);
            // swap coherence <01|rho|10>
            assert!((rho.matrix()[(1, 2)].re - (2.0 * p - 1.0) / 6.0).abs() < 1e-14);
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn werner_p1_is_symmetric_projector_over_three() {
        let rho = werner_state(2, 1.0).unwrap();
        let expected = (identity(4) + flip_operator(2)) / C::new(6.0, 0.0);
        assert!(max_abs_diff(rho.matrix(), &expected) < 1e-15);
    }

    #[test]
    fn werner_unit_trace_various_d() {
        for d in [2, 3, 4] {
            for p in [-1.0, 0.2, 1.0] {
                let rho = werner_state(d, p).unwrap();
                assert!((rho.matrix().trace().re - 1.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn isotropic_matches_bell_noise_reparam() {
        for b in [0.0, 0.25, 0.5, 0.77, 1.0] {
            let iso = isotropic_b_state(b).unwrap();
            let p = (4.0 * b - 1.0) / 3.0;
            if (0.0..=1.0).contains(&p) {
                let bn = bell_noise_state(p).unwrap();
                assert!(max_abs_diff(iso.matrix(), bn.matrix()) < 1e-14);
            }
            // Bell fidelity <phi+|rho_b|phi+> = b
            let phi = max_entangled_projector(2);
            let fid = (iso.matrix() * phi).trace().re;
            assert!((fid - b).abs() < 1e-14, "b = {b}, fidelity = {fid}");
        }
    }

    #[test]
    fn isotropic_quarter_is_maximally_mixed() {
        let rho = isotropic_b_state(0.25).unwrap();
        assert!(max_abs_diff(rho.matrix(), &(identity(4) * C::new(0.25, 0.0))) < 1e-15);
    }

    #[test]
    fn flip_operator_properties() {
        for d in [2usize, 3, 4] {
            let f = flip_operator(d);
            // F^2 = I
            assert!(max_abs_diff(&(&f * &f), &identity(d * d)) < 1e-15);
            // tr F = d
            assert!((f.trace().re - d as f64).abs() < 1e-15);
        }
        // d=2 is the SWAP matrix
        let f = flip_operator(2);
        assert_eq!(f[(1, 2)], C::new(1.0, 0.0));
        assert_eq!(f[(2, 1)], C::new(1.0, 0.0));
        assert_eq!(f[(1, 1)], C::new(0.0, 0.0));
    }

    #[test]
    fn flip_swaps_product_vectors() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let d = 3;
        let v = random_unit_vector(&mut rng, d);
        let w = random_unit_vector(&mut rng, d);
        let f = flip_operator(d);
        let vw = CMatrix::from_fn(d * d, 1, |r, _| v[r / d] * w[r % d]);
        let wv = CMatrix::from_fn(d * d, 1, |r, _| w[r / d] * v[r % d]);
        assert!(max_abs_diff(&(&f * &vw), &wv) < 1e-14);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let rho = bell_noise_state(1.0).unwrap();
        let ra = partial_trace(&rho, Subsystem::B);
        let rb = partial_trace(&rho, Subsystem::A);
        let half = identity(2) * C::new(0.5, 0.0);
        assert!(max_abs_diff(&ra, &half) < 1e-14);
        assert!(max_abs_diff(&rb, &half) < 1e-14);
    }

    #[test]
    fn partial_trace_factorizes_products() {
        let sa = random_density_matrix(2, 2, 3).unwrap();
        let sb = random_density_matrix(2, 3, 4).unwrap();
        // use the full 4x4 and 6x6 outputs as single-party factors
        let prod = tensor_product(sa.matrix(), sb.matrix());
        let rho = DensityMatrix::trusted(4, 6, prod).unwrap();
        assert!(max_abs_diff(&partial_trace(&rho, Subsystem::B), sa.matrix()) < 1e-12);
        assert!(max_abs_diff(&partial_trace(&rho, Subsystem::A), sb.matrix()) < 1e-12);
    }

    #[test]
    fn werner_reductions_are_maximally_mixed() {
        for p in [-0.8, 0.0, 0.9] {
            let rho = werner_state(2, p).unwrap();
            let half = identity(2) * C::new(0.5, 0.0);
            assert!(max_abs_diff(&partial_trace(&rho, Subsystem::A), &half) < 1e-14);
            assert!(max_abs_diff(&partial_trace(&rho, Subsystem::B), &half) < 1e-14);
        }
    }

    #[test]
    fn random_separable_is_valid_and_deterministic() {
        let a = random_separable_state(2, 3, 5, 42).unwrap();
        let b = random_separable_state(2, 3, 5, 42).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        assert_valid(&a);
    }

    #[test]
    fn random_density_matrix_full_rank_and_deterministic() {
        let a = random_density_matrix(3, 3, 7).unwrap();
        let b = random_density_matrix(3, 3, 7).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        assert!((a.matrix().trace().re - 1.0).abs() < 1e-12);
        assert!(hermitian_eigenvalues(a.matrix())[0] > 0.0);
    }

    #[test]
    fn family_constructors_validate_fully() {
        // spot-check the trusted path against the validating one
        for p in [0.0, 0.33, 1.0] {
            let m = bell_noise_state(p).unwrap();
            DensityMatrix::new(2, 2, m.matrix().clone()).unwrap();
        }
        for p in [-1.0, 0.5] {
            let m = werner_state(3, p).unwrap();
            DensityMatrix::new(3, 3, m.matrix().clone()).unwrap();
        }
    }
}
