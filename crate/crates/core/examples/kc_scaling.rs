//! Transition amplitude against ion density and its power-law fit.
//!
//! `cargo run --release --example kc_scaling [N]`

use ionchain::experiments::{kc_scaling_scan, TransitionMethod};
use ionchain::maps::{k_c_theory, GOLDEN_MEAN};
use ionchain::RelaxSettings;

fn main() -> ionchain::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let densities = [1.0, 1.3, GOLDEN_MEAN, 2.0, 2.6];
    for method in [TransitionMethod::NCollapse, TransitionMethod::GapThreshold] {
        let scan = kc_scaling_scan(&densities, n, method, &RelaxSettings::default())?;
        println!("{}:", method.name());
        for (nu, kc) in scan.densities.iter().zip(&scan.k_c) {
            println!("  nu = {nu:.3}  K_c = {kc:.5}  theory {:.5}", k_c_theory(*nu)?);
        }
        println!("  exponent {:.3}, prefactor {:.5}", scan.law.exponent, scan.law.prefactor);
    }
    Ok(())
}
