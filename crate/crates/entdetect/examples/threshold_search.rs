//! Bisects detection thresholds of several criteria on the bell-noise
//! family. PPT and CCNR land on 1/3; the moment inequality detects from
//! about 0.4425 with small borders.

use entdetect::criteria::{CriterionConfig, CriterionKind};
use entdetect::explorer::bisect_threshold;
use entdetect::state::StateFamily;

fn main() -> entdetect::Result<()> {
    let family = StateFamily::BellNoise;
    for kind in [CriterionKind::Ppt, CriterionKind::Ccnr, CriterionKind::Theorem1] {
        let mut config = CriterionConfig::new(kind);
        config.alpha = 1.0 / 729.0;
        config.beta = 1.0 / 729.0;
        let res = bisect_threshold(&family, &config, 0.0, 1.0, 1e-8)?;
        println!(
            "{:<10} threshold {:.8} after {} bisection steps",
            kind.tag(),
            res.threshold,
            res.iterations
        );
    }
    Ok(())
}
