//! Runs the Hankel-positivity test on the isotropic-type family and
//! prints the minimum eigenvalue of each substituted Hankel matrix. The
//! second-order B matrix is the one that turns negative first, close to
//! the PPT threshold 1/2.

use entdetect::criteria::{theorem2, Verdict};
use entdetect::reproduce::EX3_BETA;
use entdetect::state::isotropic_b_state;

fn main() -> entdetect::Result<()> {
    for b in [0.3, 0.49, 0.52, 0.7, 1.0] {
        let rho = isotropic_b_state(b)?;
        let report = theorem2(&rho, 1.0 / 8.0, EX3_BETA, 1, None, None)?;
        println!(
            "b = {b}: {}",
            if report.verdict == Verdict::Entangled { "entangled" } else { "inconclusive" }
        );
        for h in &report.diagnostics.hankel {
            println!("  {:?}_{}: min eig {:>12.3e}", h.kind, h.order, h.min_eigenvalue);
        }
    }
    Ok(())
}
