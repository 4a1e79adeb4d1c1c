//! Built-in reference scenarios: three parameter sets with published
//! detection thresholds, recomputed from scratch and compared within
//! documented tolerances.

use serde::{Deserialize, Serialize};

use crate::criteria::{CriterionConfig, CriterionKind};
use crate::error::{Error, Result};
use crate::explorer::bisect_threshold;
use crate::moments::singular_values;
use crate::realign::bordered_realignment;
use crate::state::{werner_state, StateFamily};

/// Beta used by scenario 3: 1/(16 sqrt 2).
pub const EX3_BETA: f64 = 0.044194173824159216;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub label: String,
    pub computed: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    fn within(label: &str, computed: f64, reference: f64, tolerance: f64) -> Self {
        Self {
            label: label.to_string(),
            computed,
            reference,
            tolerance,
            pass: (computed - reference).abs() <= tolerance,
        }
    }

    fn at_least(label: &str, computed: f64, reference: f64) -> Self {
        Self {
            label: label.to_string(),
            computed,
            reference,
            tolerance: 0.0,
            pass: computed >= reference,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReproductionReport {
    pub example: u8,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

/// Runs reference scenario 1, 2 or 3.
///
/// 1: bell-noise family, moment inequality with l = 1, alpha = beta =
///    1/729; detection onset near 0.4427, plus the realignment threshold
///    1/3 on the same family.
/// 2: d = 2 Werner family, moment inequality with l = 3, alpha = 1/729,
///    beta = 3 alpha; detection onset near -0.163744, plus the threefold
///    degenerate singular value |2p - 1|/6 of the l = 1 bordered matrix.
/// 3: isotropic-type family, Hankel criterion with l = 1, alpha = 1/8,
///    beta = 1/(16 sqrt 2); detection onset near 0.501550, plus the PPT
///    threshold 1/2 on the same family.
pub fn reproduce(example: u8) -> Result<ReproductionReport> {
    let checks = match example {
        1 => reproduce_1()?,
        2 => reproduce_2()?,
        3 => reproduce_3()?,
        other => {
            return Err(Error::ParameterOutOfRange(format!(
                "scenario must be 1, 2 or 3, got {other}"
            )))
        }
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(ReproductionReport {
        example,
        checks,
        pass,
    })
}

fn reproduce_1() -> Result<Vec<CheckResult>> {
    let family = StateFamily::BellNoise;
    let alpha = 1.0 / 729.0;
    let config = CriterionConfig {
        kind: CriterionKind::Theorem1,
        alpha,
        beta: alpha,
        l: 1,
        max_order_h: None,
        max_order_b: None,
    };
    let t1 = bisect_threshold(&family, &config, 0.0, 1.0, 1e-6)?;
    let cc = bisect_threshold(&family, &CriterionConfig::new(CriterionKind::Ccnr), 0.0, 1.0, 1e-8)?;
    Ok(vec![
        CheckResult::within("theorem1-threshold", t1.threshold, 0.4427, 0.005),
        CheckResult::within("ccnr-threshold", cc.threshold, 1.0 / 3.0, 1e-6),
    ])
}

fn reproduce_2() -> Result<Vec<CheckResult>> {
    let family = StateFamily::Werner { d: 2 };
    let alpha = 1.0 / 729.0;
    let config = CriterionConfig {
        kind: CriterionKind::Theorem1,
        alpha,
        beta: 3.0 * alpha,
        l: 3,
        max_order_h: None,
        max_order_b: None,
    };
    let t1 = bisect_threshold(&family, &config, -1.0, 0.0, 1e-6)?;
    let mut checks = vec![CheckResult::within(
        "theorem1-threshold",
        t1.threshold,
        -0.163744,
        0.005,
    )];

    // the l = 1 bordered matrix keeps three singular values pinned at
    // |2p - 1|/6; the border only perturbs the 1/2 branch
    for p in [-1.0, -0.5, 0.3] {
        let rho = werner_state(2, p)?;
        let b = bordered_realignment(&rho, 1e-3, 1e-3, 1)?;
        let target = (2.0 * p - 1.0).abs() / 6.0;
        let hits = singular_values(&b.matrix)
            .iter()
            .filter(|s| (*s - target).abs() <= 1e-9)
            .count();
        checks.push(CheckResult::at_least(
            &format!("degenerate-singular-values(p={p})"),
            hits as f64,
            3.0,
        ));
    }
    Ok(checks)
}

fn reproduce_3() -> Result<Vec<CheckResult>> {
    let family = StateFamily::IsotropicB;
    let config = CriterionConfig {
        kind: CriterionKind::Theorem2,
        alpha: 1.0 / 8.0,
        beta: EX3_BETA,
        l: 1,
        max_order_h: None,
        max_order_b: None,
    };
    // bracket pinned above the shallow near-zero discriminant at small b
    let t2 = bisect_threshold(&family, &config, 0.3, 1.0, 1e-6)?;
    let ppt = bisect_threshold(&family, &CriterionConfig::new(CriterionKind::Ppt), 0.0, 1.0, 1e-8)?;
    Ok(vec![
        CheckResult::within("theorem2-threshold", t2.threshold, 0.501550, 0.002),
        CheckResult::within("ppt-threshold", ppt.threshold, 0.5, 1e-6),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex3_beta_constant() {
        assert!((EX3_BETA - 1.0 / (16.0 * 2f64.sqrt())).abs() < 1e-17);
    }

    #[test]
    fn rejects_unknown_scenario() {
        assert!(reproduce(4).is_err());
        assert!(reproduce(0).is_err());
    }
}
