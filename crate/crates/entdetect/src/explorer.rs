//! Threshold bisection along one-parameter state families and grid
//! sweeps over (state parameter, alpha).

use serde::{Deserialize, Serialize};

use crate::criteria::CriterionConfig;
use crate::error::{Error, Result};
use crate::state::StateFamily;

/// Number of uniform pre-scan points used to locate and sanity-check the
/// bracket before bisecting.
pub const PRESCAN_POINTS: usize = 32;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub family: String,
    pub criterion: String,
    pub lo: f64,
    pub hi: f64,
    pub threshold: f64,
    pub iterations: usize,
    pub discriminant_at_threshold: f64,
}

fn discriminant_at(family: &StateFamily, config: &CriterionConfig, p: f64) -> Result<f64> {
    let rho = family.state_at(p)?;
    let report = config.evaluate(&rho)?;
    if !report.discriminant.is_finite() {
        return Err(Error::NonFiniteDiscriminant(p));
    }
    Ok(report.discriminant)
}

/// Sign bisection of the criterion discriminant on `[lo, hi]`.
///
/// A 32-point uniform pre-scan first locates the sign change; zero sign
/// changes or more than one are reported as errors rather than silently
/// bisected. The returned bracket satisfies `hi - lo <= tol` and the
/// discriminant signs at its ends differ.
pub fn bisect_threshold(
    family: &StateFamily,
    config: &CriterionConfig,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<ThresholdResult> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi || !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidAxis(format!("bad bracket [{lo}, {hi}] or tol {tol}")));
    }

    // pre-scan
    let mut xs = Vec::with_capacity(PRESCAN_POINTS);
    let mut fs = Vec::with_capacity(PRESCAN_POINTS);
    for i in 0..PRESCAN_POINTS {
        let x = lo + (hi - lo) * i as f64 / (PRESCAN_POINTS - 1) as f64;
        xs.push(x);
        fs.push(discriminant_at(family, config, x)?);
    }
    let sign = |v: f64| v > 0.0;
    let changes: Vec<usize> = (1..PRESCAN_POINTS)
        .filter(|&i| sign(fs[i]) != sign(fs[i - 1]))
        .collect();
    match changes.len() {
        0 => return Err(Error::NoBracket { lo, hi }),
        1 => {}
        n => return Err(Error::MultipleBrackets { lo, hi, count: n }),
    }

    let idx = changes[0];
    let (mut a, mut b) = (xs[idx - 1], xs[idx]);
    let mut fa = fs[idx - 1];
    let mut iterations = 0;
    while b - a > tol {
        let mid = 0.5 * (a + b);
        let fm = discriminant_at(family, config, mid)?;
        if sign(fm) == sign(fa) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    let threshold = 0.5 * (a + b);
    Ok(ThresholdResult {
        family: family.tag().to_string(),
        criterion: config.kind.tag().to_string(),
        lo: a,
        hi: b,
        threshold,
        iterations,
        discriminant_at_threshold: discriminant_at(family, config, threshold)?,
    })
}

/// One sweep axis: `steps` uniform samples on `[min, max]` inclusive.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(name: &str, min: f64, max: f64, steps: usize) -> Result<Self> {
        if steps == 0 || !(min.is_finite() && max.is_finite()) || (steps > 1 && min >= max) {
            return Err(Error::InvalidAxis(format!(
                "axis {name}: [{min}, {max}] with {steps} steps"
            )));
        }
        Ok(Self {
            name: name.to_string(),
            min,
            max,
            steps,
        })
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }
}

/// How beta follows alpha across a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BetaRule {
    /// beta fixed at the configured value.
    Fixed(f64),
    /// beta = alpha.
    EqualAlpha,
    /// beta = c * alpha.
    Proportional(f64),
}

impl BetaRule {
    pub fn beta(&self, alpha: f64) -> f64 {
        match self {
            BetaRule::Fixed(b) => *b,
            BetaRule::EqualAlpha => alpha,
            BetaRule::Proportional(c) => c * alpha,
        }
    }
}

/// Discriminant values over a (state parameter) x (alpha) grid, row-major
/// in axis declaration order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepGrid {
    pub param_axis: Axis,
    pub alpha_axis: Axis,
    pub beta_rule: BetaRule,
    pub l: usize,
    pub criterion: String,
    /// values[i * alpha_axis.steps + j] = discriminant at (param i, alpha j)
    pub values: Vec<f64>,
}

impl SweepGrid {
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.alpha_axis.steps + j]
    }

    /// CSV with a header naming the axes plus `discriminant`, one row per
    /// grid point, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{},{},discriminant\n",
            self.param_axis.name, self.alpha_axis.name
        ));
        for i in 0..self.param_axis.steps {
            for j in 0..self.alpha_axis.steps {
                out.push_str(&format!(
                    "{:.16e},{:.16e},{:.16e}\n",
                    self.param_axis.value(i),
                    self.alpha_axis.value(j),
                    self.at(i, j)
                ));
            }
        }
        out
    }
}

/// Evaluates the criterion discriminant at every grid point. Each point
/// is an independent evaluation, so results do not depend on traversal
/// order.
pub fn sweep(
    family: &StateFamily,
    config: &CriterionConfig,
    param_axis: Axis,
    alpha_axis: Axis,
    beta_rule: BetaRule,
) -> Result<SweepGrid> {
    let mut values = Vec::with_capacity(param_axis.steps * alpha_axis.steps);
    for i in 0..param_axis.steps {
        let p = param_axis.value(i);
        for j in 0..alpha_axis.steps {
            let alpha = alpha_axis.value(j);
            let mut point = *config;
            point.alpha = alpha;
            point.beta = beta_rule.beta(alpha);
            let d = discriminant_at(family, &point, p)?;
            values.push(d);
        }
    }
    Ok(SweepGrid {
        param_axis,
        alpha_axis,
        beta_rule,
        l: config.l,
        criterion: config.kind.tag().to_string(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::CriterionKind;
    use crate::state::StateFamily;

    #[test]
    fn ccnr_threshold_on_bell_noise_is_one_third() {
        let family = StateFamily::BellNoise;
        let config = CriterionConfig::new(CriterionKind::Ccnr);
        let res = bisect_threshold(&family, &config, 0.0, 1.0, 1e-8).unwrap();
        assert!((res.threshold - 1.0 / 3.0).abs() < 1e-6);
        assert!(res.hi - res.lo <= 1e-8);
    }

    #[test]
    fn ppt_threshold_on_isotropic_is_half() {
        let family = StateFamily::IsotropicB;
        let config = CriterionConfig::new(CriterionKind::Ppt);
        let res = bisect_threshold(&family, &config, 0.0, 1.0, 1e-8).unwrap();
        assert!((res.threshold - 0.5).abs() < 1e-6);
    }

    #[test]
    fn theorem1_threshold_matches_quartic_root() {
        // independent oracle: sign scan root of 9p^4 - 6p^3 + 6p^2 - 1
        let mut lo = 0.0;
        let mut hi = 1.0;
        let q = |p: f64| 9.0 * p.powi(4) - 6.0 * p.powi(3) + 6.0 * p * p - 1.0;
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            if q(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 0.4424933339).abs() < 1e-8);

        let family = StateFamily::BellNoise;
        let mut config = CriterionConfig::new(CriterionKind::Theorem1);
        config.alpha = 1.0 / 729.0;
        config.beta = 1.0 / 729.0;
        config.l = 1;
        let res = bisect_threshold(&family, &config, 0.0, 1.0, 1e-8).unwrap();
        assert!((res.threshold - root).abs() < 1e-4, "threshold {}", res.threshold);
    }

    #[test]
    fn no_bracket_is_reported() {
        let family = StateFamily::IsotropicB;
        let config = CriterionConfig::new(CriterionKind::Ccnr);
        // CCNR only fires above b = 1/2, so [0.1, 0.4] has no sign change
        let err = bisect_threshold(&family, &config, 0.1, 0.4, 1e-6).unwrap_err();
        assert!(matches!(err, Error::NoBracket { .. }));
    }

    #[test]
    fn degenerate_single_point_grid_equals_direct_call() {
        let family = StateFamily::BellNoise;
        let mut config = CriterionConfig::new(CriterionKind::Theorem1);
        config.l = 1;
        let grid = sweep(
            &family,
            &config,
            Axis::new("p", 0.8, 0.8, 1).unwrap(),
            Axis::new("alpha", 0.25, 0.25, 1).unwrap(),
            BetaRule::EqualAlpha,
        )
        .unwrap();
        assert_eq!(grid.values.len(), 1);
        let mut direct = config;
        direct.alpha = 0.25;
        direct.beta = 0.25;
        let rho = family.state_at(0.8).unwrap();
        let report = direct.evaluate(&rho).unwrap();
        assert!((grid.values[0] - report.discriminant).abs() < 1e-15);
    }

    #[test]
    fn sweep_is_deterministic_and_csv_well_formed() {
        let family = StateFamily::BellNoise;
        let config = CriterionConfig::new(CriterionKind::Theorem1);
        let run = || {
            sweep(
                &family,
                &config,
                Axis::new("p", 0.0, 1.0, 5).unwrap(),
                Axis::new("alpha", 0.01, 0.5, 4).unwrap(),
                BetaRule::EqualAlpha,
            )
            .unwrap()
        };
        let g1 = run();
        let g2 = run();
        assert_eq!(g1.values, g2.values);
        let csv = g1.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "p,alpha,discriminant");
        assert_eq!(lines.len(), 1 + 20);
        assert!(g1.values.iter().all(|v| v.is_finite()));
    }
}
