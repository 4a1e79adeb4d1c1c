//! Sweeps the moment-inequality discriminant over a (p, alpha) grid with
//! beta = alpha and prints the CSV head plus the detected region size.

use entdetect::criteria::{CriterionConfig, CriterionKind};
use entdetect::explorer::{sweep, Axis, BetaRule};
use entdetect::state::StateFamily;

fn main() -> entdetect::Result<()> {
    let grid = sweep(
        &StateFamily::BellNoise,
        &CriterionConfig::new(CriterionKind::Theorem1),
        Axis::new("p", 0.0, 1.0, 21)?,
        Axis::new("alpha", 0.01, 0.5, 21)?,
        BetaRule::EqualAlpha,
    )?;
    let csv = grid.to_csv();
    for line in csv.lines().take(5) {
        println!("{line}");
    }
    let detected = grid.values.iter().filter(|v| **v > 0.0).count();
    println!("... {} rows, {detected}/{} grid points detected", csv.lines().count() - 1, grid.values.len());
    Ok(())
}
