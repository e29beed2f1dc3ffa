//! Counting metastable minima with seeded multi-start relaxation.
//!
//! `cargo run --release --example minima [n_starts]`

use ionchain::experiments::{calibrated_traps, minima_statistics};
use ionchain::maps::GOLDEN_MEAN;
use ionchain::RelaxSettings;

fn main() -> ionchain::Result<()> {
    let n_starts = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    let settings = RelaxSettings::default().with_starts(n_starts);
    let traps = calibrated_traps(&[25, 50], GOLDEN_MEAN, 0.0, 1e-3, &settings)?;
    println!("{:>5} {:>4} {:>4} {:>12} {:>12} {:>14}", "K", "N", "Ns", "dE1", "dE_median", "E0");
    for r in minima_statistics(&[0.0, 0.2], &traps, GOLDEN_MEAN, &settings)? {
        println!(
            "{:5.2} {:4} {:4} {:12.4e} {:12.4e} {:14.8}",
            r.k, r.n, r.n_distinct, r.first_gap, r.median_gap, r.ground_energy
        );
    }
    Ok(())
}
