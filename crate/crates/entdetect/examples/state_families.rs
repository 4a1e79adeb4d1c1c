//! Builds the bundled state families, shows their basic invariants, and
//! round-trips one of them through the JSON state format.

use entdetect::io::{load_state, save_state};
use entdetect::state::{bell_noise_state, isotropic_b_state, werner_state};

fn main() -> entdetect::Result<()> {
    let bell = bell_noise_state(0.7)?;
    let werner = werner_state(3, -0.5)?;
    let iso = isotropic_b_state(0.6)?;

    for (name, rho) in [("bell-noise(0.7)", &bell), ("werner(d=3, -0.5)", &werner), ("isotropic-b(0.6)", &iso)] {
        println!(
            "{name}: {}x{} system, trace {:.12}",
            rho.d_a(),
            rho.d_b(),
            rho.matrix().trace().re
        );
    }

    let dir = std::env::temp_dir().join("entdetect-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("werner.json");
    save_state(&werner, &path)?;
    let back = load_state(&path)?;
    let diff = (back.matrix() - werner.matrix())
        .iter()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max);
    println!("JSON round trip through {}: max entry diff {diff:.2e}", path.display());
    Ok(())
}
