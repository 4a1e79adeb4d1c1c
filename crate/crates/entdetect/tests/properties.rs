//! Property tests over randomized states and parameters.

use proptest::prelude::*;

use entdetect::moments::singular_values;
use entdetect::realign::{bordered_realignment, partial_transpose, realign};
use entdetect::state::{random_density_matrix, DensityMatrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Realignment is linear: R of a mixture is the mixture of R's.
    #[test]
    fn realign_is_linear(seed_a in 0u64..1_000, seed_b in 1_000u64..2_000, t in 0.0f64..=1.0) {
        let a = random_density_matrix(2, 3, seed_a).unwrap();
        let b = random_density_matrix(2, 3, seed_b).unwrap();
        let mixed = DensityMatrix::trusted(
            2,
            3,
            a.matrix() * nalgebra::Complex::new(t, 0.0)
                + b.matrix() * nalgebra::Complex::new(1.0 - t, 0.0),
        )
        .unwrap();
        let lhs = realign(&mixed);
        let rhs = realign(&a) * nalgebra::Complex::new(t, 0.0)
            + realign(&b) * nalgebra::Complex::new(1.0 - t, 0.0);
        let diff = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        prop_assert!(diff < 1e-13);
    }

    /// The partial transpose is an involution preserving trace and
    /// Hermiticity.
    #[test]
    fn partial_transpose_is_involution(seed in 0u64..2_000, d_b in 2usize..=3) {
        let rho = random_density_matrix(2, d_b, seed).unwrap();
        let pt = partial_transpose(&rho);
        prop_assert!((pt.trace().re - 1.0).abs() < 1e-12);
        let back = DensityMatrix::trusted(2, d_b, pt).unwrap();
        let twice = partial_transpose(&back);
        let diff = (&twice - rho.matrix()).iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        prop_assert!(diff < 1e-14);
    }

    /// Border singular values dominate the unbordered ones: adding rows
    /// and columns never shrinks any s_i (interlacing lower bound).
    #[test]
    fn border_never_shrinks_singular_values(
        seed in 0u64..500,
        alpha in 0.0f64..2.0,
        beta in 0.0f64..2.0,
        l in 0usize..=4,
    ) {
        let rho = random_density_matrix(2, 2, seed).unwrap();
        let plain = singular_values(&realign(&rho));
        let bordered = bordered_realignment(&rho, alpha, beta, l).unwrap();
        let s = singular_values(&bordered.matrix);
        for (i, base) in plain.iter().enumerate() {
            prop_assert!(s[i] >= base - 1e-12);
        }
    }
}
