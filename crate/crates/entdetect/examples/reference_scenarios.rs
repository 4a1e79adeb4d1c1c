//! Re-runs the three built-in reference scenarios and prints each check.

use entdetect::reproduce::reproduce;

fn main() -> entdetect::Result<()> {
    for example in 1..=3u8 {
        let report = reproduce(example)?;
        println!("scenario {example}: {}", if report.pass { "PASS" } else { "FAIL" });
        for c in &report.checks {
            println!(
                "  {:<38} computed {:>12.6} reference {:>12.6} (tol {:.1e})",
                c.label, c.computed, c.reference, c.tolerance
            );
        }
    }
    Ok(())
}
