//! Chains generated by the nearest-neighbor equilibrium map against fully
//! relaxed chains with all Coulomb pairs.
//!
//! `cargo run --release --example map_vs_relaxation [K]`

use ionchain::chain::central_third;
use ionchain::ground_state::ground_state;
use ionchain::maps::{ion_map_orbit, k_eff, map_chain, IonMapState, GOLDEN_MEAN};
use ionchain::{ChainParams, RelaxSettings};

fn main() -> ionchain::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.1);
    let (n, omega_tr) = (50, 0.014);
    let params = ChainParams::periodic(n, omega_tr, k)?;
    let (relaxed, _) = ground_state(&params, &RelaxSettings::default().with_starts(8), GOLDEN_MEAN)?;
    println!("K = {k}, K_eff = {:.3}", k_eff(k, GOLDEN_MEAN)?);
    let spacings = |x: &[f64]| x.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>();
    let full = spacings(central_third(&relaxed.positions));
    match map_chain(n, k, omega_tr, GOLDEN_MEAN) {
        Ok(mapped) => {
            let m = spacings(central_third(&mapped));
            let worst = full
                .iter()
                .zip(&m)
                .map(|(a, b)| (a - b).abs() / a)
                .fold(0.0, f64::max);
            for (a, b) in full.iter().zip(&m) {
                println!("  relaxed {a:8.4}  map {b:8.4}");
            }
            println!("largest relative spacing mismatch: {worst:.3}");
        }
        Err(e) => println!("map chain from the resonant seed failed: {e}"),
    }

    // Shooting from the relaxed chain's own state at the start of the central
    // third isolates the nearest-neighbor truncation from the choice of seed.
    let i0 = n / 3;
    let x = &relaxed.positions;
    let seed = IonMapState::from_spacing(x[i0], x[i0] - x[i0 - 1])?;
    let steps = full.len();
    match ion_map_orbit(seed, k, omega_tr, steps) {
        Ok(orbit) => {
            for (j, s) in orbit.iter().enumerate().skip(1) {
                let rel = (s.x - x[i0 + j]) / (x[i0 + j] - x[i0 + j - 1]);
                println!("  step {j:2}: position error {rel:+.3} spacings");
            }
        }
        Err(e) => println!("shooting orbit failed: {e}"),
    }
    Ok(())
}
