//! Scans the moment inequality f = a_2^2 - sqrt((l a^2+1)(l b^2+1)) a_3
//! across the bell-noise family. The sign change near p = 0.4425 marks
//! the detection onset.

use entdetect::criteria::{theorem1, Verdict};
use entdetect::state::bell_noise_state;

fn main() -> entdetect::Result<()> {
    let alpha = 1.0 / 729.0;
    println!("{:>5}  {:>12}  verdict", "p", "f");
    for i in 0..=20 {
        let p = i as f64 / 20.0;
        let report = theorem1(&bell_noise_state(p)?, alpha, alpha, 1)?;
        println!(
            "{p:>5.2}  {:>12.6}  {}",
            report.discriminant,
            if report.verdict == Verdict::Entangled { "entangled" } else { "inconclusive" }
        );
    }
    Ok(())
}
