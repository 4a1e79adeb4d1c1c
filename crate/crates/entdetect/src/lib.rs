//! Bipartite entanglement detection from moments of the bordered
//! realignment matrix.
//!
//! The crate builds bipartite density matrices, realigns them, borders
//! the realigned matrix with scaled vectorized reduced states, and turns
//! the singular-value moments of that matrix into separability tests:
//! a moment inequality, Hankel matrix positivity with a substituted first
//! moment, and the trace-norm baselines they refine (realignment,
//! correlation-subtracted realignment, scalar and block borders, PPT).
//! An explorer bisects detection thresholds along one-parameter state
//! families and sweeps discriminants over parameter grids.
//!
//! See the `examples/` directory for one runnable example per
//! capability, and the `entdetect` binary for the command-line front end.

pub mod criteria;
pub mod error;
pub mod explorer;
pub mod io;
pub mod matrix;
pub mod moments;
pub mod realign;
pub mod reproduce;
pub mod state;

pub use criteria::{
    ccnr, ppt, run_all, shi_bound, sun_bound, theorem1, theorem2, zhang_corrected,
    CriteriaParams, CriterionConfig, CriterionKind, CriterionReport, Verdict,
};
pub use error::{Error, Result};
pub use explorer::{bisect_threshold, sweep, Axis, BetaRule, SweepGrid, ThresholdResult};
pub use matrix::{tensor_product, CMatrix};
pub use moments::{
    hankel_b, hankel_h, min_eigenvalue, moments, schatten_norm, singular_values, trace_norm,
    A0Convention, MomentSequence,
};
pub use realign::{
    bordered_realignment, omega, partial_transpose, realign, trace_norm_bound, vectorize,
    BorderedRealignment,
};
pub use state::{
    bell_noise_state, flip_operator, isotropic_b_state, partial_trace, random_density_matrix,
    random_separable_state, werner_state, DensityMatrix, StateFamily, Subsystem,
};
