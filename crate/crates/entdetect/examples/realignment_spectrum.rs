//! Realigns a d = 2 Werner state and borders the result, printing both
//! singular spectra. Three singular values sit at |2p - 1|/6 and survive
//! the border untouched; only the 1/2 branch moves.

use entdetect::moments::singular_values;
use entdetect::realign::{bordered_realignment, realign};
use entdetect::state::werner_state;

fn main() -> entdetect::Result<()> {
    for p in [-1.0, -0.5, 0.3] {
        let rho = werner_state(2, p)?;
        let plain = singular_values(&realign(&rho));
        let b = bordered_realignment(&rho, 1e-3, 1e-3, 1)?;
        let bordered = singular_values(&b.matrix);
        println!("p = {p}");
        println!("  plain    : {plain:.6?}");
        println!("  bordered : {bordered:.6?}");
        println!("  |2p-1|/6 = {:.6}", (2.0 * p - 1.0).abs() / 6.0);
    }
    Ok(())
}
