//! Dimensionless units for a calcium ion in a 1 μm lattice, and the depth of
//! the critical lattice in kelvin.
//!
//! `cargo run --example units [period_m] [mass_amu]`

use ionchain::maps::{KC_GOLDEN_NUMERIC, KC_GOLDEN_THEORY};
use ionchain::units::{derive_scales, pinning_depth_kelvin, PhysicalInputs};

fn main() -> ionchain::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<f64>());
    let period = args.next().and_then(|a| a.ok()).unwrap_or(1e-6);
    let mass = args.next().and_then(|a| a.ok()).unwrap_or(40.0);
    let scales = derive_scales(&PhysicalInputs::from_amu(period, mass, 1.0)?)?;
    println!("{}", serde_json::to_string_pretty(&scales).expect("plain struct"));
    for kc in [KC_GOLDEN_THEORY, KC_GOLDEN_NUMERIC] {
        println!("K_c = {kc}: lattice depth {:.3} K", pinning_depth_kelvin(&scales, kc)?);
    }
    Ok(())
}
