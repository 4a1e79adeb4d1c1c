//! Separability criteria. Each returns a [`CriterionReport`] whose
//! discriminant is positive exactly when the criterion certifies
//! entanglement; separable states always stay at or below zero.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::tensor_product;
use crate::moments::{
    hankel_b, hankel_h, min_eigenvalue, moments, psd_tolerance, trace_norm, A0Convention,
    HankelKind, HankelReport, MomentSequence,
};
use crate::realign::{
    bordered_realignment, partial_transpose, realign, realign_matrix, trace_norm_bound,
};
use crate::state::{partial_trace, DensityMatrix, Subsystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Entangled,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionKind {
    Ccnr,
    ZhangCorrected,
    ShiBound,
    SunBound,
    Ppt,
    Theorem1,
    Theorem2,
}

impl CriterionKind {
    pub const ALL: [CriterionKind; 7] = [
        CriterionKind::Ccnr,
        CriterionKind::ZhangCorrected,
        CriterionKind::ShiBound,
        CriterionKind::SunBound,
        CriterionKind::Ppt,
        CriterionKind::Theorem1,
        CriterionKind::Theorem2,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            CriterionKind::Ccnr => "ccnr",
            CriterionKind::ZhangCorrected => "zhang-corrected",
            CriterionKind::ShiBound => "shi-bound",
            CriterionKind::SunBound => "sun-bound",
            CriterionKind::Ppt => "ppt",
            CriterionKind::Theorem1 => "theorem1",
            CriterionKind::Theorem2 => "theorem2",
        }
    }
}

impl std::str::FromStr for CriterionKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ccnr" => Ok(CriterionKind::Ccnr),
            "zhang" | "zhang-corrected" => Ok(CriterionKind::ZhangCorrected),
            "shi" | "shi-bound" => Ok(CriterionKind::ShiBound),
            "sun" | "sun-bound" => Ok(CriterionKind::SunBound),
            "ppt" => Ok(CriterionKind::Ppt),
            "theorem1" => Ok(CriterionKind::Theorem1),
            "theorem2" => Ok(CriterionKind::Theorem2),
            other => Err(format!("unknown criterion: {other}")),
        }
    }
}

/// Parameters a criterion was evaluated with; absent fields do not apply.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_order_h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_order_b: Option<usize>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moments: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub hankel: Vec<HankelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_pt_eigenvalue: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: CriterionKind,
    pub verdict: Verdict,
    /// Criterion-specific signed value; positive certifies entanglement.
    pub discriminant: f64,
    pub params: ReportParams,
    pub diagnostics: Diagnostics,
}

/// Verdict tolerance for the trace-norm style discriminants; `scale` is
/// max(1, bound) so large-parameter runs keep a proportional margin.
fn verdict_for(discriminant: f64, scale: f64) -> Verdict {
    if discriminant > 1e-9 * scale.max(1.0) {
        Verdict::Entangled
    } else {
        Verdict::Inconclusive
    }
}

/// The a_2^2 <= sqrt((l a^2 + 1)(l b^2 + 1)) a_3 moment criterion.
/// Discriminant f = a_2^2 - bound * a_3.
pub fn theorem1(rho: &DensityMatrix, alpha: f64, beta: f64, l: usize) -> Result<CriterionReport> {
    let b = bordered_realignment(rho, alpha, beta, l)?;
    let a = moments(&b, 3, A0Convention::DimensionProduct)?;
    Ok(theorem1_from_moments(&a))
}

pub(crate) fn theorem1_from_moments(a: &MomentSequence) -> CriterionReport {
    let bound = trace_norm_bound(a.alpha, a.beta, a.l);
    let f = a.a(2) * a.a(2) - bound * a.a(3);
    CriterionReport {
        criterion: CriterionKind::Theorem1,
        verdict: verdict_for(f, bound),
        discriminant: f,
        params: ReportParams {
            alpha: Some(a.alpha),
            beta: Some(a.beta),
            l: Some(a.l),
            ..Default::default()
        },
        diagnostics: Diagnostics {
            bound: Some(bound),
            moments: Some(a.values[..=3.min(a.max_order())].to_vec()),
            ..Default::default()
        },
    }
}

/// Hankel-positivity criterion over the substituted matrices.
///
/// The B family substitutes the separable bound for a_1 on the diagonal,
/// which can only raise the spectrum of the true Gram matrix, so a
/// negative eigenvalue certifies a_1 above the bound. In the H family a_1
/// sits off the diagonal, where raising it can break positivity even for
/// separable states; there the substitution uses min(a_1, bound), which
/// is inert on separable states and still detects through the lowered
/// off-diagonal once a_1 exceeds the bound.
pub fn theorem2(
    rho: &DensityMatrix,
    alpha: f64,
    beta: f64,
    l: usize,
    max_order_h: Option<usize>,
    max_order_b: Option<usize>,
) -> Result<CriterionReport> {
    let b = bordered_realignment(rho, alpha, beta, l)?;
    let n = b.singular_value_count();
    let kh = max_order_h.unwrap_or(n / 2);
    let kb = max_order_b.unwrap_or((n.saturating_sub(1)) / 2);
    let k_needed = (2 * kh).max(2 * kb + 1).max(1);
    let a = moments(&b, k_needed, A0Convention::DimensionProduct)?;
    theorem2_from_moments(&a, kh, kb)
}

pub(crate) fn theorem2_from_moments(
    a: &MomentSequence,
    max_order_h: usize,
    max_order_b: usize,
) -> Result<CriterionReport> {
    let bound = trace_norm_bound(a.alpha, a.beta, a.l);
    let a1_h = a.a(1).min(bound);
    let mut hankel = Vec::new();
    let mut fired = false;
    let mut worst = f64::INFINITY;

    for k in 1..=max_order_h {
        let h = hankel_h(a, k)?;
        let m = h.substituted(a1_h);
        let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let eig = min_eigenvalue(&m)?;
        fired |= eig < -psd_tolerance(scale);
        worst = worst.min(eig);
        hankel.push(HankelReport {
            kind: HankelKind::H,
            order: k,
            min_eigenvalue: eig,
            scale,
        });
    }
    for r in 1..=max_order_b {
        let hb = hankel_b(a, r)?;
        let m = hb.substituted(bound);
        let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let eig = min_eigenvalue(&m)?;
        fired |= eig < -psd_tolerance(scale);
        worst = worst.min(eig);
        hankel.push(HankelReport {
            kind: HankelKind::B,
            order: r,
            min_eigenvalue: eig,
            scale,
        });
    }

    Ok(CriterionReport {
        criterion: CriterionKind::Theorem2,
        verdict: if fired { Verdict::Entangled } else { Verdict::Inconclusive },
        discriminant: -worst,
        params: ReportParams {
            alpha: Some(a.alpha),
            beta: Some(a.beta),
            l: Some(a.l),
            max_order_h: Some(max_order_h),
            max_order_b: Some(max_order_b),
        },
        diagnostics: Diagnostics {
            bound: Some(bound),
            moments: Some(a.values.clone()),
            hankel,
            ..Default::default()
        },
    })
}

/// Realignment criterion: discriminant ||R(rho)||_tr - 1.
pub fn ccnr(rho: &DensityMatrix) -> Result<CriterionReport> {
    let tn = trace_norm(&realign(rho));
    let disc = tn - 1.0;
    Ok(CriterionReport {
        criterion: CriterionKind::Ccnr,
        verdict: verdict_for(disc, 1.0),
        discriminant: disc,
        params: ReportParams::default(),
        diagnostics: Diagnostics {
            trace_norm: Some(tn),
            bound: Some(1.0),
            ..Default::default()
        },
    })
}

/// Correlation-subtracted realignment test:
/// ||R(rho - rho_A x rho_B)||_tr <= sqrt(1 - tr rho_A^2) sqrt(1 - tr rho_B^2).
pub fn zhang_corrected(rho: &DensityMatrix) -> Result<CriterionReport> {
    let rho_a = partial_trace(rho, Subsystem::B);
    let rho_b = partial_trace(rho, Subsystem::A);
    let diff = rho.matrix() - tensor_product(&rho_a, &rho_b);
    let lhs = trace_norm(&realign_matrix(&diff, rho.d_a(), rho.d_b())?);
    let purity_a = (&rho_a * &rho_a).trace().re;
    let purity_b = (&rho_b * &rho_b).trace().re;
    // purities of valid states never exceed 1; clamp the rounding dust
    let rhs = (1.0 - purity_a).max(0.0).sqrt() * (1.0 - purity_b).max(0.0).sqrt();
    let disc = lhs - rhs;
    Ok(CriterionReport {
        criterion: CriterionKind::ZhangCorrected,
        verdict: verdict_for(disc, 1.0),
        discriminant: disc,
        params: ReportParams::default(),
        diagnostics: Diagnostics {
            trace_norm: Some(lhs),
            bound: Some(rhs),
            ..Default::default()
        },
    })
}

/// Scalar-bordered trace-norm test, the l = 1 case of [`sun_bound`].
pub fn shi_bound(rho: &DensityMatrix, alpha: f64, beta: f64) -> Result<CriterionReport> {
    let mut report = sun_bound(rho, alpha, beta, 1)?;
    report.criterion = CriterionKind::ShiBound;
    Ok(report)
}

/// Bordered trace-norm test: discriminant a_1 - sqrt((l a^2 + 1)(l b^2 + 1)).
/// l = 0 reduces to the plain realignment criterion.
pub fn sun_bound(rho: &DensityMatrix, alpha: f64, beta: f64, l: usize) -> Result<CriterionReport> {
    let b = bordered_realignment(rho, alpha, beta, l)?;
    let a = moments(&b, 1, A0Convention::DimensionProduct)?;
    Ok(sun_from_moments(&a))
}

pub(crate) fn sun_from_moments(a: &MomentSequence) -> CriterionReport {
    let bound = trace_norm_bound(a.alpha, a.beta, a.l);
    let disc = a.a(1) - bound;
    CriterionReport {
        criterion: CriterionKind::SunBound,
        verdict: verdict_for(disc, bound),
        discriminant: disc,
        params: ReportParams {
            alpha: Some(a.alpha),
            beta: Some(a.beta),
            l: Some(a.l),
            ..Default::default()
        },
        diagnostics: Diagnostics {
            trace_norm: Some(a.a(1)),
            bound: Some(bound),
            ..Default::default()
        },
    }
}

/// Positive-partial-transpose test: discriminant is the negated minimum
/// eigenvalue of rho^{T_B}.
pub fn ppt(rho: &DensityMatrix) -> Result<CriterionReport> {
    let pt = partial_transpose(rho);
    let min_eig = crate::matrix::hermitian_eigenvalues(&pt)[0];
    let disc = -min_eig;
    Ok(CriterionReport {
        criterion: CriterionKind::Ppt,
        verdict: verdict_for(disc, 1.0),
        discriminant: disc,
        params: ReportParams::default(),
        diagnostics: Diagnostics {
            min_pt_eigenvalue: Some(min_eig),
            ..Default::default()
        },
    })
}

/// Shared parameters for [`run_all`].
#[derive(Debug, Clone, Copy)]
pub struct CriteriaParams {
    pub alpha: f64,
    pub beta: f64,
    pub l: usize,
    pub max_order_h: Option<usize>,
    pub max_order_b: Option<usize>,
}

impl Default for CriteriaParams {
    fn default() -> Self {
        Self {
            alpha: 1.0 / 729.0,
            beta: 1.0 / 729.0,
            l: 1,
            max_order_h: None,
            max_order_b: None,
        }
    }
}

/// Evaluates every criterion in a fixed order, sharing one SVD per
/// bordered matrix.
pub fn run_all(rho: &DensityMatrix, params: &CriteriaParams) -> Result<Vec<CriterionReport>> {
    let b = bordered_realignment(rho, params.alpha, params.beta, params.l)?;
    let n = b.singular_value_count();
    let kh = params.max_order_h.unwrap_or(n / 2);
    let kb = params.max_order_b.unwrap_or((n.saturating_sub(1)) / 2);
    let k_needed = (2 * kh).max(2 * kb + 1).max(3);
    let a = moments(&b, k_needed, A0Convention::DimensionProduct)?;

    let mut reports = vec![ccnr(rho)?, zhang_corrected(rho)?];
    if params.l == 1 {
        let mut shi = sun_from_moments(&a);
        shi.criterion = CriterionKind::ShiBound;
        reports.push(shi);
    } else {
        reports.push(shi_bound(rho, params.alpha, params.beta)?);
    }
    reports.push(sun_from_moments(&a));
    reports.push(ppt(rho)?);
    reports.push(theorem1_from_moments(&a));
    reports.push(theorem2_from_moments(&a, kh, kb)?);
    Ok(reports)
}

/// A criterion plus the parameters needed to evaluate it; the unit of
/// work for the explorer and the CLI.
#[derive(Debug, Clone, Copy)]
pub struct CriterionConfig {
    pub kind: CriterionKind,
    pub alpha: f64,
    pub beta: f64,
    pub l: usize,
    pub max_order_h: Option<usize>,
    pub max_order_b: Option<usize>,
}

impl CriterionConfig {
    pub fn new(kind: CriterionKind) -> Self {
        Self {
            kind,
            alpha: 1.0 / 729.0,
            beta: 1.0 / 729.0,
            l: 1,
            max_order_h: None,
            max_order_b: None,
        }
    }

    pub fn evaluate(&self, rho: &DensityMatrix) -> Result<CriterionReport> {
        match self.kind {
            CriterionKind::Ccnr => ccnr(rho),
            CriterionKind::ZhangCorrected => zhang_corrected(rho),
            CriterionKind::ShiBound => shi_bound(rho, self.alpha, self.beta),
            CriterionKind::SunBound => sun_bound(rho, self.alpha, self.beta, self.l),
            CriterionKind::Ppt => ppt(rho),
            CriterionKind::Theorem1 => theorem1(rho, self.alpha, self.beta, self.l),
            CriterionKind::Theorem2 => theorem2(
                rho,
                self.alpha,
                self.beta,
                self.l,
                self.max_order_h,
                self.max_order_b,
            ),
        }
    }
}
