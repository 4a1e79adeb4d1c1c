//! Evaluates every criterion on a few states and prints a verdict table,
//! including a PPT-undetectable comparison point.

use entdetect::criteria::{run_all, CriteriaParams, Verdict};
use entdetect::state::{bell_noise_state, random_separable_state, werner_state, DensityMatrix};

fn row(name: &str, rho: &DensityMatrix) -> entdetect::Result<()> {
    let reports = run_all(rho, &CriteriaParams::default())?;
    print!("{name:<22}");
    for r in &reports {
        print!(
            " {:>15}",
            format!(
                "{}:{}",
                r.criterion.tag().split('-').next().unwrap(),
                if r.verdict == Verdict::Entangled { "E" } else { "-" }
            )
        );
    }
    println!();
    Ok(())
}

fn main() -> entdetect::Result<()> {
    row("bell-noise(0.2)", &bell_noise_state(0.2)?)?;
    row("bell-noise(0.6)", &bell_noise_state(0.6)?)?;
    row("werner(d=2, -0.8)", &werner_state(2, -0.8)?)?;
    row("separable(2x3)", &random_separable_state(2, 3, 4, 7)?)?;
    Ok(())
}
