//! Trap frequency that holds the golden-mean density in the central third
//! as the chain grows.
//!
//! `cargo run --release --example calibration [K]`

use ionchain::ground_state::calibrate_trap;
use ionchain::maps::GOLDEN_MEAN;
use ionchain::RelaxSettings;

fn main() -> ionchain::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.0);
    let settings = RelaxSettings::default();
    for n in [25, 50, 100, 150, 300] {
        let c = calibrate_trap(n, GOLDEN_MEAN, k, 0.005, &settings)?;
        println!(
            "N = {n:4}  omega_tr = {:.6}  omega_tr sqrt(N) = {:.4}  density = {:.5}  probes = {}",
            c.omega_tr,
            c.omega_tr * (n as f64).sqrt(),
            c.central_density,
            c.n_probes
        );
    }
    Ok(())
}
