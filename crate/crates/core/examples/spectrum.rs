//! Phonon spectra of a 50-ion chain in the sliding and in the pinned phase.
//!
//! `cargo run --release --example spectrum`

use ionchain::ground_state::{central_density, ground_state};
use ionchain::maps::GOLDEN_MEAN;
use ionchain::phonons::{fit_acoustic, spectrum};
use ionchain::{ChainParams, RelaxSettings};

fn main() -> ionchain::Result<()> {
    let settings = RelaxSettings::default().with_starts(8);
    for k in [0.03, 0.2] {
        let params = ChainParams::periodic(50, 0.014, k)?;
        let (best, catalog) = ground_state(&params, &settings, GOLDEN_MEAN)?;
        let spec = spectrum(&params, &best)?;
        let fit = fit_acoustic(&spec)?;
        println!(
            "K = {k}: omega0 = {:.5}, C_v = {:.3}, intercept = {:.4}, central density = {:.4}, {} minima",
            spec.lowest_frequency(),
            fit.sound_velocity,
            fit.intercept,
            central_density(&best.positions)?,
            catalog.n_distinct,
        );
        for (i, w) in spec.frequencies.iter().enumerate().step_by(5) {
            println!("  k = {:.2}  omega = {:.5}", spec.k_scaled[i], w);
        }
    }
    Ok(())
}
